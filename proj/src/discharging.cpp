#include "isocycle/discharging.hpp"

#include <algorithm>
#include <set>

namespace isocycle {

std::string to_string(Condition c) { return "C" + std::to_string(static_cast<int>(c)); }

int WeightLedger::total() const {
    int sum = 0;
    for (int w : final) sum += w;
    return sum;
}

bool ConditionEvaluator::is_extremal_of_three_arch_of(FaceId f, int e) const {
    e = a_.cycle.wrap(e);
    for (int id : a_.arches_of_face(f)) {
        const Arch& x = a_.arches[id];
        if (x.m == 3 && (x.start == e || a_.cycle.wrap(x.start + 2) == e)) return true;
    }
    return false;
}

bool ConditionEvaluator::is_middle_of_three_arch_of(FaceId f, int e) const {
    e = a_.cycle.wrap(e);
    for (int id : a_.arches_of_face(f)) {
        const Arch& x = a_.arches[id];
        if (x.m == 3 && a_.cycle.wrap(x.start + 1) == e) return true;
    }
    return false;
}

bool ConditionEvaluator::has_opposite_major(const Arch& b) const {
    for (int k = 0; k < b.m; ++k) {
        if (!a_.faces[a_.opposite(b.face, b.start + k)].minor) return true;
    }
    return false;
}

bool ConditionEvaluator::vertex_is_extremal_of_two_arch(FaceId f, int vertex_index) const {
    vertex_index = a_.cycle.wrap(vertex_index);
    for (int id : a_.arches_of_face(f)) {
        const Arch& x = a_.arches[id];
        if (x.m == 2 && (x.start == vertex_index || a_.cycle.wrap(x.start + 2) == vertex_index)) return true;
    }
    return false;
}

bool ConditionEvaluator::is_mono(FaceId g, int e) const {
    const FaceInfo& f = a_.faces[a_.opposite(g, e)];
    return f.id != g && f.has_c_edge(a_.cycle.wrap(e - 1)) && f.has_c_edge(a_.cycle.wrap(e + 1));
}

bool ConditionEvaluator::c1(FaceId g, int e) const { return !a_.faces[a_.opposite(g, e)].minor; }

bool ConditionEvaluator::c2(FaceId g, int e) const {
    const FaceId f = a_.opposite(g, e);
    if (!a_.faces[f].minor) return false;
    const FaceInfo& fg = a_.faces[g];
    if (!fg.thin && fg.m == 2) return true;
    if (fg.m != 3) return false;
    const FaceInfo& h = a_.faces[a_.opposite(g, fg.run_start + 1)];
    return h.minor && h.thin && h.m == 2 && h.id != f;
}

bool ConditionEvaluator::c3(FaceId g, int e) const {
    const FaceId f = a_.opposite(g, e);
    const FaceInfo& ff = a_.faces[f];
    if (!ff.minor || ff.m < 3) return false;
    if (is_extremal_of_three_arch_of(f, e)) return false;
    for (int id : a_.arches_of_face(g)) {
        const Arch& b = a_.arches[id];
        if (b.m != 3 || a_.cycle.wrap(b.start + 1) != e) continue;
        if (has_opposite_major(b)) continue;
        const int ends[2] = {b.start, a_.cycle.wrap(b.start + 2)};
        for (int k = 0; k < 2; ++k) {
            const int x = ends[k], y = ends[1 - k];
            if (a_.is_extremal_edge(g, x) && (a_.opposite(g, y) != f || a_.faces[g].m == 3)) return true;
        }
    }
    return false;
}

bool ConditionEvaluator::c4(FaceId g, int e) const {
    const FaceId f = a_.opposite(g, e);
    if (!a_.faces[f].minor) return false;
    for (int id : a_.arches_of_face(g)) {
        const Arch& b = a_.arches[id];
        if (b.m != 4) continue;
        const int s = b.start;
        int x, y;
        if (a_.cycle.wrap(s + 1) == e) {
            x = s;
            y = a_.cycle.wrap(s + 3);
        } else if (a_.cycle.wrap(s + 2) == e) {
            x = a_.cycle.wrap(s + 3);
            y = s;
        } else {
            continue;
        }
        if (!a_.is_extremal_edge(g, x)) continue;
        const FaceInfo& h = a_.faces[a_.opposite(g, y)];
        if (!(h.minor && !h.thin && h.m == 2)) continue;
        if (a_.shared_edges_arch(f, b) == 3) return true;
    }
    return false;
}

bool ConditionEvaluator::c5(FaceId g, int e) {
    const FaceId f = a_.opposite(g, e);
    if (!a_.faces[f].minor) return false;
    if (is_extremal_of_three_arch_of(f, e) || is_extremal_of_three_arch_of(g, e)) return false;
    for (int id : a_.arches_of_face(g)) {
        const Arch& b = a_.arches[id];
        if (b.m != 4) continue;
        const int s = b.start;
        int x, y, y_vertex;
        if (a_.cycle.wrap(s + 1) == e) {
            x = s;
            y = a_.cycle.wrap(s + 3);
            y_vertex = a_.cycle.wrap(s + 4);
        } else if (a_.cycle.wrap(s + 2) == e) {
            x = a_.cycle.wrap(s + 3);
            y = s;
            y_vertex = s;
        } else {
            continue;
        }
        if (!a_.is_extremal_edge(g, x)) continue;
        if (a_.shared_edges_arch(f, b) != 3) continue;
        const FaceId h = a_.opposite(g, y);
        if (vertex_is_extremal_of_two_arch(g, y_vertex) || vertex_is_extremal_of_two_arch(h, y_vertex)) continue;
        if (transfer_.query_any({h, y})) return true;
    }
    return false;
}

bool ConditionEvaluator::c6(FaceId g, int e) const {
    const FaceId f = a_.opposite(g, e);
    const FaceInfo& fg = a_.faces[g];
    if (!a_.faces[f].minor || fg.thin || fg.m != 4) return false;
    const int r = fg.run_start;
    int far;
    if (a_.cycle.wrap(r + 1) == e) {
        far = a_.cycle.wrap(r + 3);
    } else if (a_.cycle.wrap(r + 2) == e) {
        far = r;
    } else {
        return false;
    }
    if (is_middle_of_three_arch_of(g, e)) return false;
    for (const Arch& x : a_.arches) {
        if (x.m == 3 && x.face != f && a_.cycle.wrap(x.start + 1) == far) return true;
    }
    return false;
}

bool ConditionEvaluator::c7(FaceId g, int e) {
    const FaceId f = a_.opposite(g, e);
    if (!a_.faces[f].minor) return false;
    for (const TunnelTrack* track : t_.tracks()) {
        if (track->cyclic) continue;
        auto rec = transfer_.query({g, e}, *track);
        if (!rec) continue;
        const FaceEdge exit = track->exit;
        if (!a_.faces[exit.face].minor) continue;
        const bool exit_pulls = c1(exit.face, exit.edge) || c2(exit.face, exit.edge) ||
                                c3(exit.face, exit.edge) || c4(exit.face, exit.edge) ||
                                c5(exit.face, exit.edge) || c6(exit.face, exit.edge);
        if (exit_pulls) {
            last_chain_ = rec->chain;
            return true;
        }
    }
    return false;
}

bool ConditionEvaluator::evaluate(Condition cond, FaceId g, int e) {
    e = a_.cycle.wrap(e);
    if (!a_.faces[g].minor || !a_.faces[g].has_c_edge(e)) return false;
    switch (cond) {
        case Condition::C1: return c1(g, e);
        case Condition::C2: return c2(g, e);
        case Condition::C3: return c3(g, e);
        case Condition::C4: return c4(g, e);
        case Condition::C5: return c5(g, e);
        case Condition::C6: return c6(g, e);
        case Condition::C7: return c7(g, e);
    }
    return false;
}

WeightLedger apply_discharging(const CycleAnalysis& a, const TunnelSet& t, DischargeOptions opt) {
    if (a.c() < 6) throw Error(ErrorKind::CycleTooShort, "discharging needs c >= 6");
    if (a.has_minor_one_face()) {
        throw Error(ErrorKind::MinorOneFacePresent, "H has a minor 1-face; extend first");
    }
    ConditionEvaluator eval(a, t, opt.strict_transfer);
    WeightLedger ledger;
    ledger.c = a.c();
    for (const FaceInfo& f : a.faces) ledger.initial.push_back(f.m);
    const Condition first_phase[] = {Condition::C1, Condition::C2, Condition::C3,
                                     Condition::C4, Condition::C5, Condition::C6};
    for (int phase = 0; phase < 2; ++phase) {
        for (const FaceInfo& g : a.faces) {
            if (!g.minor) continue;
            for (int e : g.c_edges) {
                auto record = [&](Condition cond) {
                    PullRecord rec;
                    rec.puller = g.id;
                    rec.source = a.opposite(g.id, e);
                    rec.edge = e;
                    rec.condition = cond;
                    rec.mono = cond == Condition::C3 && eval.is_mono(g.id, e);
                    if (cond == Condition::C7) rec.chain = eval.last_chain();
                    ledger.pulls.push_back(std::move(rec));
                };
                if (phase == 0) {
                    for (Condition cond : first_phase) {
                        if (eval.evaluate(cond, g.id, e)) record(cond);
                    }
                } else if (eval.evaluate(Condition::C7, g.id, e)) {
                    record(Condition::C7);
                }
            }
        }
    }
    ledger.final = ledger.initial;
    for (const PullRecord& p : ledger.pulls) {
        ++ledger.final[p.puller];
        --ledger.final[p.source];
    }
    return ledger;
}

ExclusivityReport check_exclusivity(const WeightLedger& ledger) {
    ExclusivityReport out;
    std::map<int, std::vector<const PullRecord*>> by_edge;
    for (const PullRecord& p : ledger.pulls) by_edge[p.edge].push_back(&p);
    for (const auto& [edge, recs] : by_edge) {
        if (recs.size() <= 1) continue;
        std::set<FaceId> pullers;
        for (const PullRecord* p : recs) pullers.insert(p->puller);
        if (pullers.size() < recs.size()) out.per_face = false;
        if (pullers.size() > 1) out.opposite = false;
        out.ok = false;
        std::string desc;
        for (const PullRecord* p : recs) {
            if (!desc.empty()) desc += ", ";
            desc += "face " + std::to_string(p->puller) + " by " + to_string(p->condition);
        }
        out.violations.emplace_back(edge, desc);
    }
    return out;
}

std::vector<FaceId> check_weight_bounds(const WeightLedger& ledger, const CycleAnalysis& a) {
    std::vector<FaceId> out;
    for (const FaceInfo& f : a.faces) {
        const int need = !f.minor ? 0 : (f.thin ? 2 : 4);
        if (ledger.final[f.id] < need) out.push_back(f.id);
    }
    return out;
}

InequalityReport check_inequalities(const WeightLedger& ledger, const CycleAnalysis& a) {
    InequalityReport r;
    const long long c = ledger.c > 0 ? ledger.c : a.c();
    r.m_minus = static_cast<int>(a.minor_faces(kMinus).size());
    r.m_plus = static_cast<int>(a.minor_faces(kPlus).size());
    r.ineq1 = 2 * c >= 4LL * (r.m_minus + r.m_plus);
    r.ineq2 = 2 * c >= 2LL * r.m_minus + 4LL * r.m_plus;
    r.applicable1 = !a.part.v_minus.empty();
    r.bound_num = 2LL * (a.n() + (r.applicable1 ? 4 : 3));
    r.bound_den = 3;
    r.bound_met = 3 * c >= r.bound_num;
    return r;
}

InvariantReport check_invariants(const CycleAnalysis& a, const TunnelSet& t, const WeightLedger& ledger,
                                 DischargeOptions opt) {
    InvariantReport r;
    if (ledger.total() != 2 * a.c()) {
        r.conservation = false;
        r.notes.push_back("total weight " + std::to_string(ledger.total()) + " != 2c");
    }
    const auto excl = check_exclusivity(ledger);
    r.exclusivity = excl.per_face;
    r.opposite_exclusivity = excl.opposite;
    if (!excl.ok) {
        for (const auto& [e, d] : excl.violations) r.notes.push_back("edge " + std::to_string(e) + ": " + d);
    }
    auto pulls_over = [&ledger](FaceEdge p) {
        return std::any_of(ledger.pulls.begin(), ledger.pulls.end(),
                           [&](const PullRecord& x) { return x.puller == p.face && x.edge == p.edge; });
    };
    TransferPairOracle oracle(a, t, opt.strict_transfer);
    for (const Tunnel& tunnel : t.tunnels) {
        if (tunnel.cyclic) continue;
        if (pulls_over(tunnel.ccw.exit) && pulls_over(tunnel.cw.exit)) {
            r.tunnel_one_way = false;
            r.notes.push_back("tunnel " + std::to_string(tunnel.id) + " pulls through both exits");
        }
        for (const TunnelTrack* track : {&tunnel.ccw, &tunnel.cw}) {
            const bool exit_pulls = pulls_over(track->exit);
            for (const auto& rec : oracle.all(*track)) {
                if (pulls_over(rec.pair) != exit_pulls) {
                    r.exit_coupling = false;
                    r.notes.push_back("transfer pair (face " + std::to_string(rec.pair.face) + ", edge " +
                                      std::to_string(rec.pair.edge) + ") decoupled from its exit");
                }
            }
        }
    }
    std::map<FaceId, std::vector<int>> mono_by_face;
    for (const PullRecord& p : ledger.pulls) {
        if (p.mono) mono_by_face[p.source].push_back(p.edge);
    }
    for (const auto& [f, edges] : mono_by_face) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const int d = a.cycle.wrap(edges[i] - edges[j]);
                if (std::min(d, a.c() - d) < 3) {
                    r.mono_spacing = false;
                    r.notes.push_back("mono edges " + std::to_string(edges[i]) + " and " +
                                      std::to_string(edges[j]) + " closer than 3");
                }
            }
        }
    }
    return r;
}

nlohmann::json ledger_to_json(const CycleAnalysis& a, const WeightLedger& ledger) {
    using nlohmann::json;
    json doc;
    doc["c"] = ledger.c;
    doc["total"] = ledger.total();
    json faces = json::array();
    for (const FaceInfo& f : a.faces) {
        faces.push_back({{"id", f.id},
                         {"minor", f.minor},
                         {"thin", f.thin},
                         {"initial", ledger.initial[f.id]},
                         {"final", ledger.final[f.id]}});
    }
    doc["faces"] = std::move(faces);
    json pulls = json::array();
    for (const PullRecord& p : ledger.pulls) {
        json jp{{"puller", p.puller},
                {"source", p.source},
                {"edge", p.edge},
                {"condition", to_string(p.condition)},
                {"mono", p.mono}};
        if (!p.chain.empty()) {
            json chain = json::array();
            for (const FaceEdge& fe : p.chain) chain.push_back({fe.face, fe.edge});
            jp["chain"] = std::move(chain);
        }
        pulls.push_back(std::move(jp));
    }
    doc["pulls"] = std::move(pulls);
    const auto ineq = check_inequalities(ledger, a);
    doc["inequalities"] = {{"ineq1", ineq.ineq1},
                           {"ineq2", ineq.ineq2},
                           {"ineq1_applies", ineq.applicable1},
                           {"m_minus", ineq.m_minus},
                           {"m_plus", ineq.m_plus},
                           {"implied_bound", std::to_string(ineq.bound_num) + "/" + std::to_string(ineq.bound_den)},
                           {"bound_met", ineq.bound_met}};
    doc["deficient_faces"] = check_weight_bounds(ledger, a);
    const auto excl = check_exclusivity(ledger);
    doc["exclusive"] = excl.per_face;
    doc["opposite_exclusive"] = excl.opposite;
    return doc;
}

}  // namespace isocycle
