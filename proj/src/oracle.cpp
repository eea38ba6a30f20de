#include "isocycle/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace isocycle {

namespace {

// Backtracking over an induced subgraph with local indices. Degree pruning:
// an unvisited vertex needs two usable neighbours (one for a path end).
class HamSearch {
public:
    HamSearch(const PlaneGraph& g, const std::vector<VertexId>& vertices) : verts_(vertices) {
        std::vector<int> local(g.vertex_count(), -1);
        for (std::size_t i = 0; i < verts_.size(); ++i) local[verts_[i]] = static_cast<int>(i);
        adj_.resize(verts_.size());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            for (VertexId w : g.rotation(verts_[i])) {
                if (local[w] >= 0) adj_[i].push_back(local[w]);
            }
        }
        local_ = std::move(local);
    }

    int local(VertexId v) const { return local_[v]; }
    int size() const { return static_cast<int>(verts_.size()); }
    bool out_of_budget() const { return exhausted_; }

    // mode: path from s to t (t >= 0) or cycle through s (t < 0).
    void run(int s, int t, long long budget, const std::function<bool(const std::vector<int>&)>& visit) {
        const int n = size();
        s_ = s;
        t_ = t;
        budget_ = budget;
        nodes_ = 0;
        exhausted_ = false;
        visit_ = &visit;
        on_.assign(n, 0);
        avail_.assign(n, 0);
        for (int i = 0; i < n; ++i) avail_[i] = static_cast<int>(adj_[i].size());
        path_.clear();
        for (int i = 0; i < n; ++i) {
            if (i == s || i == t) continue;
            if (avail_[i] < 2) return;
        }
        if (t < 0 && n >= 3 && avail_[s] < 2) return;
        push(s);
        dfs();
    }

    std::vector<VertexId> to_global(const std::vector<int>& p) const {
        std::vector<VertexId> out;
        out.reserve(p.size());
        for (int i : p) out.push_back(verts_[i]);
        return out;
    }

    bool adjacent(int a, int b) const {
        return std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end();
    }

private:
    void push(int v) {
        on_[v] = 1;
        path_.push_back(v);
    }
    void pop() {
        on_[path_.back()] = 0;
        path_.pop_back();
    }
    // v stops being usable by its unvisited neighbours (it became internal)
    void retire(int v) {
        for (int x : adj_[v]) --avail_[x];
    }
    void unretire(int v) {
        for (int x : adj_[v]) ++avail_[x];
    }

    // returns false to stop the whole search
    bool dfs() {
        if (budget_ > 0 && ++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const int n = size();
        const int cur = path_.back();
        if (static_cast<int>(path_.size()) == n) {
            if (t_ >= 0) return cur == t_ ? (*visit_)(path_) : true;
            if (n >= 3 && adjacent(cur, s_)) return (*visit_)(path_);
            return true;
        }
        if (cur == t_) return true;
        const bool keep = cur == s_ && t_ < 0;  // the cycle start stays usable as the closing end
        if (!keep) retire(cur);
        // a neighbour left with too few usable neighbours must be entered now
        int forced = -1;
        bool ok = true;
        for (int x : adj_[cur]) {
            if (on_[x]) continue;
            const int need = (x == t_) ? 1 : 2;
            if (avail_[x] < need) {
                if (forced >= 0) ok = false;
                forced = x;
            }
        }
        bool cont = true;
        if (ok) {
            for (int x : adj_[cur]) {
                if (on_[x] || (forced >= 0 && x != forced)) continue;
                if (x == t_ && static_cast<int>(path_.size()) != n - 1) continue;
                push(x);
                cont = dfs();
                pop();
                if (!cont) break;
            }
        }
        if (!keep) unretire(cur);
        return cont;
    }

    std::vector<VertexId> verts_;
    std::vector<int> local_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> on_;
    std::vector<int> avail_;
    std::vector<int> path_;
    int s_ = 0;
    int t_ = -1;
    long long budget_ = 0;
    long long nodes_ = 0;
    bool exhausted_ = false;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

}  // namespace

std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
    if (cycle.empty()) return cycle;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

std::optional<std::vector<VertexId>> hamiltonian_cycle_on(const PlaneGraph& g,
                                                          const std::vector<VertexId>& vertices,
                                                          long long node_budget) {
    if (vertices.size() < 3) return std::nullopt;
    HamSearch hs(g, vertices);
    // start at a vertex of least degree
    int s = 0;
    std::optional<std::vector<VertexId>> out;
    for (int i = 1; i < hs.size(); ++i) {
        if (g.degree(vertices[i]) < g.degree(vertices[s])) s = i;
    }
    std::function<bool(const std::vector<int>&)> visit = [&](const std::vector<int>& p) {
        out = hs.to_global(p);
        return false;
    };
    hs.run(s, -1, node_budget, visit);
    return out;
}

std::optional<std::vector<VertexId>> hamiltonian_path_on(const PlaneGraph& g,
                                                         const std::vector<VertexId>& vertices,
                                                         VertexId s, VertexId t, long long node_budget) {
    HamSearch hs(g, vertices);
    std::optional<std::vector<VertexId>> out;
    if (hs.local(s) < 0 || hs.local(t) < 0 || s == t) return out;
    std::function<bool(const std::vector<int>&)> visit = [&](const std::vector<int>& p) {
        out = hs.to_global(p);
        return false;
    };
    hs.run(hs.local(s), hs.local(t), node_budget, visit);
    return out;
}

void for_each_hamiltonian_cycle(const PlaneGraph& g, const std::vector<VertexId>& vertices,
                                const std::function<bool(const std::vector<VertexId>&)>& visit) {
    if (vertices.size() < 3) return;
    std::vector<VertexId> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    HamSearch hs(g, sorted);
    std::function<bool(const std::vector<int>&)> inner = [&](const std::vector<int>& p) {
        if (p[1] > p.back()) return true;  // the reversed copy is reported instead
        return visit(hs.to_global(p));
    };
    hs.run(0, -1, 0, inner);
}

namespace {

struct CircSearch {
    const PlaneGraph& g;
    int n;
    int best = 0;
    int s = 0;
    std::vector<char> on;
    std::vector<int> mark;
    int stamp = 0;

    int reachable_from(VertexId v) {
        ++stamp;
        std::vector<VertexId> stack{v};
        mark[v] = stamp;
        int count = 0;
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (VertexId w : g.rotation(x)) {
                if (w < s || on[w] || mark[w] == stamp) continue;
                mark[w] = stamp;
                ++count;
                stack.push_back(w);
            }
        }
        return count;
    }

    void dfs(VertexId cur, int len) {
        if (best == n) return;
        if (len >= 3 && g.adjacent(cur, s)) best = std::max(best, len);
        if (len + reachable_from(cur) <= best) return;
        for (VertexId w : g.rotation(cur)) {
            if (w <= s || on[w]) continue;
            on[w] = 1;
            dfs(w, len + 1);
            on[w] = 0;
        }
    }
};

}  // namespace

int oracle_circumference(const PlaneGraph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit) throw Error(ErrorKind::TooLarge, "oracle limited to n <= " + std::to_string(limit));
    CircSearch cs{g, n, 0, 0, {}, {}, 0};
    cs.on.assign(n, 0);
    cs.mark.assign(n, 0);
    for (int s = 0; s < n && n - s > cs.best; ++s) {
        cs.s = s;
        cs.on[s] = 1;
        cs.dfs(s, 1);
        cs.on[s] = 0;
    }
    return cs.best;
}

std::vector<std::vector<VertexId>> oracle_isolating_cycles(const PlaneGraph& g, std::optional<int> length,
                                                           std::size_t cap, int limit) {
    const int n = g.vertex_count();
    if (n > limit) throw Error(ErrorKind::TooLarge, "oracle limited to n <= " + std::to_string(limit));
    std::vector<std::vector<VertexId>> out;
    const int lo = length ? *length : 3;
    const int hi = length ? *length : n;
    for (int c = lo; c <= hi && out.size() < cap; ++c) {
        const int k = n - c;
        std::vector<std::vector<VertexId>> found;
        std::vector<VertexId> chosen;
        std::vector<int> blocked(n, 0);
        // independent sets of size k, lexicographic
        std::function<bool(int)> pick = [&](int from) -> bool {
            if (static_cast<int>(chosen.size()) == k) {
                std::vector<char> in(n, 0);
                for (VertexId v : chosen) in[v] = 1;
                std::vector<VertexId> rest;
                for (int v = 0; v < n; ++v) {
                    if (!in[v]) rest.push_back(v);
                }
                for_each_hamiltonian_cycle(g, rest, [&](const std::vector<VertexId>& cyc) {
                    found.push_back(canonical_cycle(cyc));
                    return out.size() + found.size() < cap;
                });
                return out.size() + found.size() < cap;
            }
            for (int v = from; v < n; ++v) {
                if (n - v < k - static_cast<int>(chosen.size())) break;
                if (blocked[v]) continue;
                chosen.push_back(v);
                for (VertexId w : g.rotation(v)) ++blocked[w];
                const bool cont = pick(v + 1);
                for (VertexId w : g.rotation(v)) --blocked[w];
                chosen.pop_back();
                if (!cont) return false;
            }
            return true;
        };
        pick(0);
        std::sort(found.begin(), found.end());
        for (auto& cyc : found) {
            if (out.size() >= cap) break;
            out.push_back(std::move(cyc));
        }
    }
    return out;
}

}  // namespace isocycle
