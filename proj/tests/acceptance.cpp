// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "isocycle/discharging.hpp"
#include "isocycle/tunnels.hpp"

using namespace isocycle;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every isolating cycle of the sweep corpus plus the cycles grown from them;
// built once and shared by criteria 2 to 5.
struct Sweep {
    struct Instance {
        InstanceRecipe recipe;
        PlaneGraph g;
        std::vector<std::vector<VertexId>> starts;
        std::vector<std::vector<VertexId>> audit;  // no minor 1-face
        std::vector<GrowthTrace> traces;
        std::vector<std::string> grow_errors;
    };
    std::vector<Instance> instances;
    double grow_seconds = 0;
};

Sweep& sweep() {
    static Sweep s = [] {
        Sweep out;
        const auto t0 = Clock::now();
        for (const auto& r : corpus::sweep_recipes(110)) {
            Sweep::Instance inst;
            inst.recipe = r;
            inst.g = realize(r);
            inst.starts = corpus::start_cycles(inst.g, 50);
            inst.audit = corpus::audit_cycles(inst.g);
            for (const auto& c : inst.starts) {
                try {
                    inst.traces.push_back(grow_to_bound(inst.g, c));
                } catch (const Error& e) {
                    inst.grow_errors.push_back(r.label() + ": " + e.what());
                }
            }
            out.instances.push_back(std::move(inst));
        }
        out.grow_seconds = seconds_since(t0);
        return out;
    }();
    return s;
}

Verdict criterion1() {
    const PlaneGraph g = realize({"insertion", "octahedron", 0, 0, false, 0});
    const int n = g.vertex_count();
    const int bound = (2 * (n + 4)) / 3;
    const int circ = oracle_circumference(g);
    const auto starts = oracle_isolating_cycles(g);
    int ok = 0;
    std::string first_bad;
    for (const auto& c : starts) {
        try {
            const auto t = grow_to_bound(g, c);
            if (static_cast<int>(t.final_cycle.size()) == 12) {
                ++ok;
            } else if (first_bad.empty()) {
                first_bad = "final length " + std::to_string(t.final_cycle.size());
            }
        } catch (const Error& e) {
            if (first_bad.empty()) first_bad = e.what();
        }
    }
    std::ostringstream d;
    d << "n=" << n << " circ=" << circ << " bound=" << bound << " starts=" << starts.size() << " reached12=" << ok;
    if (!first_bad.empty()) d << " first failure: " << first_bad;
    return {n == 14 && circ == 12 && bound == 12 && !starts.empty() && ok == static_cast<int>(starts.size()), d.str()};
}

Verdict criterion2() {
    const auto t0 = Clock::now();
    int instances = 0;
    long cycles = 0;
    long alarms = 0;
    long out_of_range = 0;
    std::map<int, int> added_hist;
    for (const auto& inst : sweep().instances) {
        if (!is_essentially_four_connected(inst.g)) continue;
        ++instances;
        const int budget = extension_budget(inst.g);
        for (const auto& c : inst.starts) {
            ++cycles;
            const auto mv = find_extension_exhaustive(inst.g, c);
            if (!mv) {
                ++alarms;
                continue;
            }
            ++added_hist[mv->added()];
            const bool valid = canonical_cycle(apply_move(inst.g, c, *mv)) == canonical_cycle(mv->result) &&
                               is_isolating(inst.g, CycleOnGraph(inst.g, mv->result));
            if (!valid || mv->added() < 1 || mv->added() > budget) ++out_of_range;
        }
    }
    std::ostringstream d;
    d << "instances=" << instances << " cycles=" << cycles << " alarms=" << alarms << " bad_moves=" << out_of_range
      << " added{";
    for (auto [k, v] : added_hist) d << k << ":" << v << ' ';
    d << "} " << seconds_since(t0) << "s";
    return {instances >= 100 && cycles > 0 && alarms == 0 && out_of_range == 0, d.str()};
}

Verdict criterion3() {
    long traces = 0;
    long bad = 0;
    long tier1 = 0;
    long tier2 = 0;
    std::string first;
    std::size_t errors = 0;
    for (const auto& inst : sweep().instances) {
        errors += inst.grow_errors.size();
        if (first.empty() && !inst.grow_errors.empty()) first = inst.grow_errors.front();
        for (const auto& t : inst.traces) {
            ++traces;
            tier1 += t.tier1_moves;
            tier2 += t.tier2_moves;
            const std::string p = corpus::trace_problem(inst.g, t);
            if (!p.empty()) {
                ++bad;
                if (first.empty()) first = inst.recipe.label() + ": " + p;
            }
        }
    }
    std::ostringstream d;
    d << "traces=" << traces << " violations=" << bad << " errors=" << errors << " tier1_moves=" << tier1
      << " tier2_moves=" << tier2 << " sweep_time=" << sweep().grow_seconds << "s";
    if (!first.empty()) d << " first: " << first;
    return {traces > 0 && bad == 0 && errors == 0, d.str()};
}

// Start cycles and every intermediate cycle of their traces.
template <typename F>
void for_each_analyzed(F&& f) {
    for (const auto& inst : sweep().instances) {
        std::set<std::vector<VertexId>> seen;
        auto visit = [&](const std::vector<VertexId>& c) {
            if (seen.insert(canonical_cycle(c)).second) f(inst, c);
        };
        for (const auto& c : inst.starts) visit(c);
        for (const auto& c : inst.audit) visit(c);
        for (const auto& t : inst.traces) {
            for (const auto& s : t.steps) {
                if (static_cast<int>(s.move.result.size()) < length_bound(inst.g.vertex_count())) visit(s.move.result);
            }
        }
    }
}

Verdict criterion4() {
    long analyzed = 0;
    long bad = 0;
    long degenerate = 0;
    long hamiltonian = 0;
    std::string first;
    for_each_analyzed([&](const Sweep::Instance& inst, const std::vector<VertexId>& c) {
        try {
            const CycleAnalysis a = analyze_cycle(inst.g, c);
            ++analyzed;
            if (a.hamiltonian()) {
                ++hamiltonian;
                return;
            }
            if (a.degenerate_side) {
                ++degenerate;
                if (first.empty()) first = inst.recipe.label() + ": degenerate side";
                return;
            }
            const TreeCheck tc = check_trees(a);
            if (!tc.ok) {
                ++bad;
                if (first.empty()) first = inst.recipe.label() + ": " + tc.failures.front();
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DegenerateSide) {
                ++degenerate;
            } else {
                ++bad;
            }
            if (first.empty()) first = inst.recipe.label() + ": " + e.what();
        }
    });
    std::ostringstream d;
    d << "analyzed=" << analyzed << " tree_failures=" << bad << " degenerate=" << degenerate
      << " hamiltonian_skipped=" << hamiltonian;
    if (!first.empty()) d << " first: " << first;
    return {analyzed > 0 && bad == 0 && degenerate == 0, d.str()};
}

Verdict criterion5() {
    long audited = 0;
    long skipped = 0;
    long bad = 0;
    long opposite_pairs = 0;
    long opposite_cycles = 0;
    std::map<std::string, int> double_pulls;
    std::string first;
    auto flag = [&](const std::string& why) {
        ++bad;
        if (first.empty()) first = why;
    };
    for_each_analyzed([&](const Sweep::Instance& inst, const std::vector<VertexId>& c) {
        if (c.size() < 6) return;
        try {
            const CycleAnalysis a = analyze_cycle(inst.g, c);
            if (a.has_minor_one_face()) {
                ++skipped;
                return;
            }
            const TunnelSet t = build_tunnels(a);
            const WeightLedger l1 = apply_discharging(a, t);
            const WeightLedger l2 = apply_discharging(a, t);
            const WeightLedger l3 = apply_discharging(analyze_cycle(inst.g, c), build_tunnels(a));
            ++audited;
            const std::string who = inst.recipe.label() + " c=" + std::to_string(c.size()) + ": ";
            if (!(l1 == l2) || !(l1 == l3)) flag(who + "ledger not deterministic");
            if (l1.total() != 2 * a.c()) flag(who + "total " + std::to_string(l1.total()) + " != 2c");
            // weight pulled by a face over one of its C-edges is 0 or 1
            std::map<std::pair<FaceId, int>, std::string> pulled;
            std::map<int, std::set<FaceId>> pullers;
            bool per_face = true;
            for (const auto& p : l1.pulls) {
                auto& conds = pulled[{p.puller, p.edge}];
                if (!conds.empty()) {
                    per_face = false;
                    ++bad;
                    ++double_pulls[conds + "+" + to_string(p.condition)];
                    if (first.empty()) {
                        first = who + "face " + std::to_string(p.puller) + " pulls twice over edge " +
                                std::to_string(p.edge);
                    }
                }
                conds += conds.empty() ? to_string(p.condition) : "+" + to_string(p.condition);
                pullers[p.edge].insert(p.puller);
            }
            const auto excl = check_exclusivity(l1);
            if (excl.per_face != per_face) flag(who + "check_exclusivity disagrees");
            long here = 0;
            for (const auto& [e, fs] : pullers) here += fs.size() > 1;
            opposite_pairs += here;
            opposite_cycles += here > 0;
            if (excl.opposite != (here == 0)) flag(who + "opposite-face diagnostic disagrees");
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DegenerateSide) return;  // reported by criterion 4
            flag(inst.recipe.label() + ": " + e.what());
        }
    });
    std::ostringstream d;
    d << "audited=" << audited << " skipped_minor_1_face=" << skipped << " violations=" << bad
      << " diagnostic: edges pulled by both faces=" << opposite_pairs << " on " << opposite_cycles << " cycles";
    for (const auto& [k, v] : double_pulls) d << " double " << k << " x" << v;
    if (!first.empty()) d << " first: " << first;
    return {audited > 0 && bad == 0, d.str()};
}

FaceId face_at(const CycleAnalysis& a, const std::string& apex, int edge) {
    const auto v = a.graph().find(apex);
    for (const auto& f : a.faces) {
        if (!v || !f.has_c_edge(edge)) continue;
        if (std::find(f.off_vertices.begin(), f.off_vertices.end(), *v) != f.off_vertices.end()) return f.id;
    }
    return -1;
}

Verdict criterion6() {
    const PlaneGraph g = fixtures::track_instance();
    const CycleAnalysis a = analyze_cycle(g, fixtures::first_cycle(fixtures::kTrackCycle));
    const TunnelSet ts = build_tunnels(a);
    std::ostringstream d;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            d << "[" << what << "] ";
        }
    };

    // partition of eligible 3-arches
    std::multiset<int> covered;
    for (const auto& t : ts.tunnels) covered.insert(t.arches.begin(), t.arches.end());
    std::multiset<int> eligible(ts.eligible.begin(), ts.eligible.end());
    expect(covered == eligible, "tunnels partition eligible 3-arches");

    const FaceId ft1 = face_at(a, "a1", 0);
    const FaceId h = face_at(a, "b2", 2);
    const FaceId gf = face_at(a, "a3", 4);
    const FaceId f = face_at(a, "b4", 6);
    const FaceId ft5 = face_at(a, "a5", 8);
    const FaceId gp = face_at(a, "b0", 18);
    const int tid = ts.tunnel_of_arch.empty() ? -1 : [&] {
        for (const auto& arch : a.arches) {
            if (arch.face == ft1 && arch.m == 3) return ts.tunnel_of_arch[arch.id];
        }
        return -1;
    }();
    expect(tid >= 0, "T1 is in a tunnel");
    if (!ok) return {false, d.str()};
    const Tunnel& tun = ts.tunnels[tid];
    expect(tun.arches.size() == 5 && !tun.cyclic, "five-arch acyclic tunnel");
    expect(tun.ccw.exit == FaceEdge{gp, 18}, "exit pair is (g', e')");
    const FaceEdge exit{gp, 18};
    const std::vector<std::pair<FaceEdge, bool>> on_table{
        {exit, true},     {{ft1, 0}, true}, {{h, 2}, true},  {{gf, 4}, true},
        {{f, 6}, true},   {{ft5, 8}, true}, {{gf, 2}, false},
    };
    int on_ok = 0;
    for (const auto& [p, want] : on_table) {
        if (on_track(a, tun, exit, p) == want) ++on_ok;
    }
    expect(on_ok == static_cast<int>(on_table.size()), "on-track truth table");
    expect(on_track(a, tun, {gf, 2}, {f, 8}), "(g, v2v3) on-track with (f, v8v9)");

    TransferPairOracle oracle(a, ts, true);
    const std::vector<std::pair<FaceEdge, bool>> tp_table{
        {{ft1, 0}, true}, {{h, 2}, true}, {{gf, 4}, true}, {{f, 6}, false}, {{ft5, 8}, false},
    };
    int tp_ok = 0;
    for (const auto& [p, want] : tp_table) {
        if (oracle.query(p, tun.ccw).has_value() == want) ++tp_ok;
    }
    expect(tp_ok == static_cast<int>(tp_table.size()), "transfer-pair classification");
    d << "tunnels=" << ts.tunnels.size() << " on_track " << on_ok << "/" << on_table.size() << " transfer " << tp_ok
      << "/" << tp_table.size();
    return {ok, d.str()};
}

Verdict criterion7() {
    const PlaneGraph g = named_graph("cube");
    const auto starts = oracle_isolating_cycles(g, 6);
    int ok = 0;
    for (const auto& c : starts) {
        const auto t = grow_to_bound(g, c);
        std::set<int> lengths{static_cast<int>(t.initial.size())};
        for (const auto& s : t.steps) lengths.insert(s.length_after);
        if (lengths == std::set<int>{6, 8}) ++ok;
    }
    std::ostringstream d;
    d << "isolating 6-cycles=" << starts.size() << " with lengths {6,8}=" << ok
      << " bound=" << length_bound(g.vertex_count());
    return {!starts.empty() && ok == static_cast<int>(starts.size()), d.str()};
}

Verdict criterion8() {
    InstanceRecipe r{"insertion", "random", 200, 2024, true, 0};
    const PlaneGraph g = realize(r);
    std::vector<VertexId> base;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.name(v).rfind('i', 0) != 0) base.push_back(v);
    }
    const auto h0 = Clock::now();
    const auto cycle = hamiltonian_cycle_on(g, base);
    const double ham_s = seconds_since(h0);
    if (!cycle) return {false, "no Hamiltonian cycle of the base found"};
    const auto t0 = Clock::now();
    GrowthTrace t;
    try {
        t = grow_to_bound(g, *cycle);
    } catch (const Error& e) {
        return {false, std::string("grow failed: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << "n=" << g.vertex_count() << " start=" << cycle->size() << " final=" << t.final_cycle.size()
      << " bound=" << t.bound << " steps=" << t.steps.size() << " tier2_fallback_rate=" << t.fallback_rate()
      << " grow=" << secs << "s start_search=" << ham_s << "s";
    const bool contract = corpus::trace_problem(g, t).empty();
    return {contract && secs < 60.0, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"tight bound on the octahedron insertion instance", criterion1},
        {"every short isolating cycle extends (exhaustive)", criterion2},
        {"growth contract on the sweep corpus", criterion3},
        {"extension trees and leaf counts", criterion4},
        {"discharging conservation and exclusivity", criterion5},
        {"tunnel partition, on-track and transfer pairs", criterion6},
        {"cube lengths from isolating 6-cycles", criterion7},
        {"n = 200 growth under 60 s", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        const auto t0 = Clock::now();
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %zu: %s (%s) [%.2fs]\n", v.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), v.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
        if (!v.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
