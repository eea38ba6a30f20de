#include "isocycle/extension.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "isocycle/oracle.hpp"

namespace isocycle {

int length_bound(int n) { return std::min(2 * (n + 4) / 3, n); }

int extension_budget(const PlaneGraph& g) { return 3 + count_faces_of_size(g, 5); }

namespace {

std::set<Edge> cycle_edges(const std::vector<VertexId>& cyc) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < cyc.size(); ++i) out.insert(Edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    return out;
}

// Maximal runs of consecutive cycle edges not in `keep`, as vertex paths.
std::vector<std::vector<VertexId>> missing_runs(const std::vector<VertexId>& cyc, const std::set<Edge>& keep) {
    const int c = static_cast<int>(cyc.size());
    auto edge_kept = [&](int i) { return keep.count(Edge(cyc[i % c], cyc[(i + 1) % c])) > 0; };
    std::vector<std::vector<VertexId>> out;
    int anchor = -1;
    for (int i = 0; i < c; ++i) {
        if (edge_kept(i)) {
            anchor = i;
            break;
        }
    }
    if (anchor < 0) {
        std::vector<VertexId> all = cyc;
        all.push_back(cyc.front());
        out.push_back(std::move(all));
        return out;
    }
    std::vector<VertexId> run;
    for (int k = 1; k <= c; ++k) {
        const int i = (anchor + k) % c;
        if (!edge_kept(i)) {
            if (run.empty()) run.push_back(cyc[i]);
            run.push_back(cyc[(i + 1) % c]);
        } else if (!run.empty()) {
            out.push_back(std::move(run));
            run.clear();
        }
    }
    if (!run.empty()) out.push_back(std::move(run));
    return out;
}

}  // namespace

ExtensionMove diff_move(const std::vector<VertexId>& from, const std::vector<VertexId>& to, std::string tag,
                        int start_edge) {
    ExtensionMove m;
    const auto ef = cycle_edges(from);
    const auto et = cycle_edges(to);
    m.removed = missing_runs(from, et);
    m.inserted = missing_runs(to, ef);
    std::set<VertexId> old(from.begin(), from.end());
    for (VertexId v : to) {
        if (!old.count(v)) m.added_vertices.push_back(v);
    }
    std::sort(m.added_vertices.begin(), m.added_vertices.end());
    m.pattern_tag = std::move(tag);
    m.start_edge = start_edge;
    m.result = to;
    return m;
}

std::vector<VertexId> apply_move(const PlaneGraph& g, const std::vector<VertexId>& cycle,
                                 const ExtensionMove& move) {
    auto invalid = [](const std::string& why) { return Error(ErrorKind::InvalidMove, why); };
    if (move.removed.empty() || move.inserted.empty()) throw invalid("empty move");
    std::map<Edge, int> edges;
    for (const Edge& e : cycle_edges(cycle)) edges[e] = 1;
    for (const auto& p : move.removed) {
        if (p.size() < 2) throw invalid("removed path too short");
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            auto it = edges.find(Edge(p[i], p[i + 1]));
            if (it == edges.end() || it->second == 0) throw invalid("removed path leaves the cycle");
            it->second = 0;
        }
    }
    for (const auto& q : move.inserted) {
        if (q.size() < 2) throw invalid("inserted path too short");
        std::set<VertexId> seen;
        for (std::size_t i = 0; i < q.size(); ++i) {
            const bool closing = i + 1 == q.size() && q.front() == q.back() && q.size() > 3;
            if (!closing && !seen.insert(q[i]).second) throw invalid("inserted path revisits a vertex");
            if (i + 1 < q.size()) {
                if (q[i] < 0 || q[i] >= g.vertex_count() || !g.adjacent(q[i], q[i + 1])) {
                    throw invalid("inserted path uses a non-edge");
                }
                if (++edges[Edge(q[i], q[i + 1])] > 1) throw invalid("inserted edge already on the cycle");
            }
        }
    }
    std::map<VertexId, std::vector<VertexId>> nbr;
    for (const auto& [e, count] : edges) {
        if (count == 0) continue;
        nbr[e.u].push_back(e.v);
        nbr[e.v].push_back(e.u);
    }
    for (const auto& [v, ns] : nbr) {
        if (ns.size() != 2) throw invalid("vertex " + g.name(v) + " has degree " + std::to_string(ns.size()));
    }
    for (VertexId v : cycle) {
        if (!nbr.count(v)) throw invalid("move drops cycle vertex " + g.name(v));
    }
    if (nbr.size() <= cycle.size()) throw invalid("move adds no vertex");
    std::vector<VertexId> out{cycle.front()};
    VertexId prev = cycle.front();
    const auto& first = nbr[cycle.front()];
    VertexId cur = std::find(first.begin(), first.end(), cycle[1]) != first.end() ? cycle[1] : first.front();
    while (cur != cycle.front()) {
        out.push_back(cur);
        const auto& ns = nbr[cur];
        const VertexId next = ns[0] == prev ? ns[1] : ns[0];
        prev = cur;
        cur = next;
        if (out.size() > nbr.size()) throw invalid("result is not a cycle");
    }
    if (out.size() != nbr.size()) throw invalid("result splits into several cycles");
    return out;
}

namespace {

struct Window {
    int start;
    int length;  // C-edges; >= c means the whole cycle
};

class FastSearch {
public:
    FastSearch(const CycleAnalysis& a, FastOptions opt) : a_(a), g_(a.graph()), opt_(opt) {
        c_ = a.c();
        budget_ = extension_budget(g_);
        off_ = a.part.v_minus;
        off_.insert(off_.end(), a.part.v_plus.begin(), a.part.v_plus.end());
        std::sort(off_.begin(), off_.end());
    }

    int budget() const { return budget_; }

    std::optional<ExtensionMove> try_window(Window w, int k, const std::string& tag,
                                            const std::vector<VertexId>* restrict_to = nullptr) {
        const bool whole = w.length >= c_;
        if (whole && c_ + k > opt_.whole_cycle_limit) return std::nullopt;
        const int L = whole ? c_ : w.length;
        const auto key = std::make_tuple(whole ? 0 : a_.cycle.wrap(w.start), L, k);
        if (!restrict_to && !tried_.insert(key).second) return std::nullopt;

        std::vector<VertexId> window;
        std::vector<char> in_window(g_.vertex_count(), 0);
        const int span = whole ? c_ - 1 : L;
        for (int i = 0; i <= span; ++i) {
            const VertexId v = a_.cycle.at(w.start + i);
            window.push_back(v);
            in_window[v] = 1;
        }
        std::vector<VertexId> cands;
        const auto& pool = restrict_to ? *restrict_to : off_;
        for (VertexId x : pool) {
            int hits = 0;
            for (VertexId y : g_.rotation(x)) hits += in_window[y];
            if (hits >= 2) cands.push_back(x);
        }
        if (static_cast<int>(cands.size()) < k) return std::nullopt;
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        const int m = static_cast<int>(cands.size());
        while (true) {
            std::vector<VertexId> verts = window;
            for (int i : pick) verts.push_back(cands[i]);
            std::optional<std::vector<VertexId>> found;
            if (whole) {
                found = hamiltonian_cycle_on(g_, verts, 200000);
            } else {
                found = hamiltonian_path_on(g_, verts, window.front(), window.back(), 20000);
            }
            if (found) {
                std::vector<VertexId> next;
                if (whole) {
                    next = *found;
                } else {
                    next = *found;
                    for (int i = L + 1; i < c_; ++i) next.push_back(a_.cycle.at(w.start + i));
                }
                return diff_move(a_.cycle.vertices(), next, tag, whole ? 0 : a_.cycle.wrap(w.start));
            }
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
        return std::nullopt;
    }

    std::vector<Window> region_windows(int lo, int hi, int max_len) const {
        std::vector<Window> out;
        const int r = hi - lo;
        for (int s = lo; s < hi; ++s) {
            for (int len = 1; len <= std::min(max_len, hi - s); ++len) out.push_back({s, len});
        }
        (void)r;
        return out;
    }

    const CycleAnalysis& a_;
    const PlaneGraph& g_;
    FastOptions opt_;
    int c_ = 0;
    int budget_ = 0;
    std::vector<VertexId> off_;
    std::set<std::tuple<int, int, int>> tried_;
};

bool window_less(const Window& x, const Window& y) {
    if (x.start != y.start) return x.start < y.start;
    return x.length < y.length;
}

}  // namespace

std::optional<ExtensionMove> find_extension_fast(const CycleAnalysis& a, const TunnelSet* tunnels,
                                                 const WeightLedger* ledger, FastOptions opt) {
    if (a.c() >= length_bound(a.n()) || a.hamiltonian()) return std::nullopt;
    FastSearch fs(a, opt);
    const int c = a.c();

    // E0: a minor 1-face over C-edge i, replaced by v_i v_f v_{i+1}
    std::vector<std::pair<int, VertexId>> e0;
    for (const FaceInfo& f : a.faces) {
        if (f.minor && f.m == 1 && f.v_f >= 0) e0.emplace_back(f.run_start, f.v_f);
    }
    std::sort(e0.begin(), e0.end());
    if (!e0.empty()) {
        const auto [i, x] = e0.front();
        std::vector<VertexId> next;
        for (int k = 0; k < c; ++k) {
            next.push_back(a.cycle.at(i + 1 + k));
        }
        next.push_back(x);
        return diff_move(a.cycle.vertices(), next, "E0", i);
    }

    std::vector<Window> deficit;
    if (ledger) {
        for (FaceId f : check_weight_bounds(*ledger, a)) {
            const FaceInfo& info = a.faces[f];
            if (info.minor && info.run_start >= 0) {
                auto w = fs.region_windows(info.run_start - 2, info.run_start + info.m + 2, opt.tunnel_window);
                deficit.insert(deficit.end(), w.begin(), w.end());
            } else {
                for (int e : info.c_edges) {
                    auto w = fs.region_windows(e - 2, e + 3, opt.max_window);
                    deficit.insert(deficit.end(), w.begin(), w.end());
                }
            }
        }
        for (Window& w : deficit) w.start = a.cycle.wrap(w.start);
        std::sort(deficit.begin(), deficit.end(), window_less);
    }
    std::vector<Window> scan;
    for (int s = 0; s < c; ++s) {
        for (int len = 1; len <= std::min(opt.max_window, c - 1); ++len) scan.push_back({s, len});
    }
    struct TunnelHint {
        Window w;
        std::vector<VertexId> restrict;
    };
    std::vector<TunnelHint> tunnel_hints;
    if (tunnels) {
        for (const Tunnel& t : tunnels->tunnels) {
            if (t.cyclic) {
                std::vector<VertexId> apexes;
                for (int id : t.arches) {
                    const VertexId x = a.faces[a.arches[id].face].v_f;
                    if (x >= 0) apexes.push_back(x);
                }
                std::sort(apexes.begin(), apexes.end());
                apexes.erase(std::unique(apexes.begin(), apexes.end()), apexes.end());
                tunnel_hints.push_back({{0, c}, apexes});
            } else {
                const int lo = t.edge_union.front() - 2;
                const int len = static_cast<int>(t.edge_union.size()) + 4;
                if (len <= opt.tunnel_window) {
                    tunnel_hints.push_back({{a.cycle.wrap(lo), len}, {}});
                }
            }
        }
    }

    for (int k = 1; k <= fs.budget(); ++k) {
        for (const Window& w : deficit) {
            if (auto m = fs.try_window(w, k, "deficit-reroute")) return m;
        }
        for (const Window& w : scan) {
            if (auto m = fs.try_window(w, k, "scan-reroute")) return m;
        }
        for (const TunnelHint& h : tunnel_hints) {
            auto m = h.restrict.empty() ? fs.try_window(h.w, k, "tunnel-reroute")
                                        : fs.try_window(h.w, k, "tunnel-reroute", &h.restrict);
            if (m) return m;
        }
    }
    return std::nullopt;
}

std::optional<ExtensionMove> find_extension_exhaustive(const PlaneGraph& g, const std::vector<VertexId>& cycle) {
    std::vector<char> on(g.vertex_count(), 0);
    for (VertexId v : cycle) on[v] = 1;
    std::vector<VertexId> off;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!on[v]) off.push_back(v);
    }
    const int budget = std::min<int>(extension_budget(g), static_cast<int>(off.size()));
    const int m = static_cast<int>(off.size());
    for (int k = 1; k <= budget; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::vector<VertexId> verts = cycle;
            for (int i : pick) verts.push_back(off[i]);
            if (auto found = hamiltonian_cycle_on(g, verts)) {
                return diff_move(cycle, *found, "exhaustive", -1);
            }
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<GrowthStep> extend_once(const PlaneGraph& g, const std::vector<VertexId>& cycle,
                                      const GrowOptions& opt) {
    GrowthStep step;
    step.length_before = static_cast<int>(cycle.size());
    if (opt.tier1) {
        const CycleAnalysis a = analyze_cycle(g, cycle);
        const TunnelSet t = build_tunnels(a);
        std::optional<WeightLedger> ledger;
        if (a.c() >= 6 && !a.has_minor_one_face()) {
            ledger = apply_discharging(a, t, DischargeOptions{opt.strict_transfer});
        }
        if (auto m = find_extension_fast(a, &t, ledger ? &*ledger : nullptr, opt.fast)) {
            step.move = std::move(*m);
            step.move.result = apply_move(g, cycle, step.move);
            step.length_after = static_cast<int>(step.move.result.size());
            return step;
        }
    }
    if (opt.tier2) {
        if (auto m = find_extension_exhaustive(g, cycle)) {
            step.move = std::move(*m);
            step.move.result = apply_move(g, cycle, step.move);
            step.length_after = static_cast<int>(step.move.result.size());
            step.tier2 = true;
            return step;
        }
    }
    return std::nullopt;
}

GrowthTrace grow_to_bound(const PlaneGraph& g, const std::vector<VertexId>& cycle, GrowOptions opt) {
    GrowthTrace trace;
    trace.initial = cycle;
    trace.bound = length_bound(g.vertex_count());
    std::vector<VertexId> cur = cycle;
    {
        CycleOnGraph check(g, cur);
        if (!is_isolating(g, check)) throw Error(ErrorKind::ContractViolation, "cycle is not isolating");
    }
    const int budget = extension_budget(g);
    while (static_cast<int>(cur.size()) < trace.bound) {
        auto step = extend_once(g, cur, opt);
        if (!step) {
            std::string names;
            for (VertexId v : cur) names += (names.empty() ? "" : ",") + g.name(v);
            throw Error(ErrorKind::ExtensionNotFound,
                        "no extension below the bound for cycle " + names + " (n=" +
                            std::to_string(g.vertex_count()) + ")");
        }
        std::set<VertexId> before(cur.begin(), cur.end());
        for (VertexId v : cur) {
            if (std::find(step->move.result.begin(), step->move.result.end(), v) == step->move.result.end()) {
                throw Error(ErrorKind::ContractViolation, "extension dropped a vertex");
            }
        }
        if (step->move.added() < 1 || step->move.added() > budget) {
            throw Error(ErrorKind::ContractViolation, "extension grew by " + std::to_string(step->move.added()));
        }
        CycleOnGraph next(g, step->move.result);
        if (!is_isolating(g, next)) throw Error(ErrorKind::ContractViolation, "extension is not isolating");
        cur = step->move.result;
        (step->tier2 ? trace.tier2_moves : trace.tier1_moves)++;
        if (opt.on_step) opt.on_step(*step, cur);
        trace.steps.push_back(std::move(*step));
    }
    trace.final_cycle = cur;
    return trace;
}

nlohmann::json move_to_json(const PlaneGraph& g, const ExtensionMove& m) {
    using nlohmann::json;
    auto names = [&g](const std::vector<VertexId>& vs) {
        json out = json::array();
        for (VertexId v : vs) out.push_back(g.name(v));
        return out;
    };
    json removed = json::array(), inserted = json::array();
    for (const auto& p : m.removed) removed.push_back(names(p));
    for (const auto& p : m.inserted) inserted.push_back(names(p));
    return {{"pattern", m.pattern_tag},   {"start_edge", m.start_edge}, {"removed", removed},
            {"inserted", inserted},       {"added", names(m.added_vertices)},
            {"result", names(m.result)}};
}

nlohmann::json trace_to_json(const PlaneGraph& g, const GrowthTrace& t) {
    using nlohmann::json;
    json steps = json::array();
    for (const GrowthStep& s : t.steps) {
        json js = move_to_json(g, s.move);
        js["length_before"] = s.length_before;
        js["length_after"] = s.length_after;
        js["tier"] = s.tier2 ? 2 : 1;
        steps.push_back(std::move(js));
    }
    json lengths = json::array();
    lengths.push_back(t.initial.size());
    for (const GrowthStep& s : t.steps) lengths.push_back(s.length_after);
    json final_names = json::array();
    for (VertexId v : t.final_cycle) final_names.push_back(g.name(v));
    return {{"bound", t.bound},
            {"lengths", lengths},
            {"steps", steps},
            {"final_cycle", final_names},
            {"tier1_moves", t.tier1_moves},
            {"tier2_moves", t.tier2_moves},
            {"fallback_rate", t.fallback_rate()}};
}

}  // namespace isocycle
