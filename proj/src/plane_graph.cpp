#include "isocycle/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace isocycle {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InconsistentRotation: return "InconsistentRotation";
        case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ContractViolation: return "ContractViolation";
        case ErrorKind::DegenerateSide: return "DegenerateSide";
        case ErrorKind::MinorOneFacePresent: return "MinorOneFacePresent";
        case ErrorKind::CycleTooShort: return "CycleTooShort";
        case ErrorKind::NotInTunnel: return "NotInTunnel";
        case ErrorKind::InvalidMove: return "InvalidMove";
        case ErrorKind::ExtensionNotFound: return "ExtensionNotFound";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BaseNotFourConnected: return "BaseNotFourConnected";
        case ErrorKind::SizeTooSmall: return "SizeTooSmall";
        case ErrorKind::UnknownName: return "UnknownName";
    }
    return "Unknown";
}

PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<VertexId>> rotation) {
    std::vector<std::string> names(rotation.size());
    for (std::size_t i = 0; i < names.size(); ++i) names[i] = std::to_string(i);
    return build(std::move(names), std::move(rotation));
}

PlaneGraph PlaneGraph::build(std::vector<std::string> names,
                             std::vector<std::vector<VertexId>> rotation,
                             std::optional<std::vector<VertexId>> outer_face) {
    const int n = static_cast<int>(rotation.size());
    if (static_cast<int>(names.size()) != n) {
        throw Error(ErrorKind::ParseError, "name count does not match rotation count");
    }
    {
        std::set<std::string> seen(names.begin(), names.end());
        if (static_cast<int>(seen.size()) != n) {
            throw Error(ErrorKind::ParseError, "duplicate vertex identifier");
        }
    }
    if (n == 0) throw Error(ErrorKind::Disconnected, "empty graph");

    for (int v = 0; v < n; ++v) {
        std::set<VertexId> seen;
        for (VertexId w : rotation[v]) {
            if (w < 0 || w >= n) {
                throw Error(ErrorKind::InconsistentRotation,
                            "vertex " + names[v] + " lists an unknown neighbour");
            }
            if (w == v) throw Error(ErrorKind::NotSimple, "loop at vertex " + names[v]);
            if (!seen.insert(w).second) {
                throw Error(ErrorKind::NotSimple,
                            "parallel edge " + names[v] + "-" + names[w]);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        for (VertexId w : rotation[v]) {
            const auto& back = rotation[w];
            if (std::find(back.begin(), back.end(), v) == back.end()) {
                throw Error(ErrorKind::InconsistentRotation,
                            names[v] + " lists " + names[w] + " but not vice versa");
            }
        }
    }

    PlaneGraph g;
    g.names_ = std::move(names);
    g.rotation_ = std::move(rotation);
    g.index_darts();

    if (n > 1) {
        std::vector<char> none(n, 0);
        if (components_without(g, none).size() != 1) {
            throw Error(ErrorKind::Disconnected, "graph is not connected");
        }
    }

    g.trace_faces();
    const int euler = g.vertex_count() - g.edge_count() + g.face_count();
    if (euler != 2) {
        throw Error(ErrorKind::NonPlanarEmbedding,
                    "Euler characteristic " + std::to_string(euler) + " (expected 2)");
    }

    if (outer_face && !outer_face->empty()) {
        const auto& want = *outer_face;
        const int k = static_cast<int>(want.size());
        bool found = false;
        // exact traversal direction first, then the reversed one
        for (int dir = 0; dir < 2 && !found; ++dir) {
            for (const Face& f : g.faces_) {
                auto verts = g.face_vertices(f.id);
                if (static_cast<int>(verts.size()) != k) continue;
                for (int shift = 0; shift < k && !found; ++shift) {
                    bool ok = true;
                    for (int i = 0; i < k && ok; ++i) {
                        int j = dir == 0 ? (shift + i) % k : ((shift - i) % k + k) % k;
                        ok = verts[j] == want[i];
                    }
                    found = ok;
                }
                if (found) {
                    g.outer_face_ = f.id;
                    break;
                }
            }
        }
        if (!found) {
            throw Error(ErrorKind::ParseError, "outer_face does not match any traced face");
        }
    }
    return g;
}

void PlaneGraph::index_darts() {
    const int n = vertex_count();
    offset_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rotation_[v].size());
    const int darts = offset_[n];
    dart_tail_.resize(darts);
    dart_head_.resize(darts);
    sorted_nbrs_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        auto& sorted = sorted_nbrs_[v];
        for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
            dart_tail_[offset_[v] + i] = v;
            dart_head_[offset_[v] + i] = rotation_[v][i];
            sorted.emplace_back(rotation_[v][i], i);
        }
        std::sort(sorted.begin(), sorted.end());
    }
    twin_.resize(darts);
    for (int d = 0; d < darts; ++d) twin_[d] = dart(dart_head_[d], dart_tail_[d]);
}

DartId PlaneGraph::dart(VertexId u, VertexId v) const {
    const auto& sorted = sorted_nbrs_[u];
    auto it = std::lower_bound(sorted.begin(), sorted.end(), std::make_pair(v, -1));
    if (it == sorted.end() || it->first != v) return -1;
    return offset_[u] + it->second;
}

void PlaneGraph::trace_faces() {
    const int darts = dart_count();
    next_.resize(darts);
    for (int d = 0; d < darts; ++d) {
        // d = (u,v); successor of u in rotation(v)
        const DartId back = twin_[d];  // (v,u)
        const VertexId v = dart_head_[d];
        const int idx = back - offset_[v];
        const int deg = degree(v);
        next_[d] = offset_[v] + (idx + 1) % deg;
    }
    face_of_.assign(darts, -1);
    faces_.clear();
    for (int d = 0; d < darts; ++d) {
        if (face_of_[d] >= 0) continue;
        Face f;
        f.id = static_cast<FaceId>(faces_.size());
        DartId cur = d;
        do {
            face_of_[cur] = f.id;
            f.darts.push_back(cur);
            cur = next_[cur];
        } while (cur != d);
        faces_.push_back(std::move(f));
    }
}

std::optional<VertexId> PlaneGraph::find(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (names_[v] == name) return v;
    }
    return std::nullopt;
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
    std::vector<VertexId> out;
    out.reserve(faces_[f].darts.size());
    for (DartId d : faces_[f].darts) out.push_back(dart_tail_[d]);
    return out;
}

std::vector<Edge> PlaneGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int d = 0; d < dart_count(); ++d) {
        if (dart_tail_[d] < dart_head_[d]) out.emplace_back(dart_tail_[d], dart_head_[d]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PlaneGraph PlaneGraph::without_edges(const std::vector<Edge>& removed) const {
    std::set<Edge> drop(removed.begin(), removed.end());
    std::vector<std::vector<VertexId>> rot(rotation_.size());
    for (int v = 0; v < vertex_count(); ++v) {
        for (VertexId w : rotation_[v]) {
            if (!drop.count(Edge(v, w))) rot[v].push_back(w);
        }
    }
    PlaneGraph h;
    h.names_ = names_;
    h.rotation_ = std::move(rot);
    h.index_darts();
    h.trace_faces();
    h.outer_face_ = 0;
    return h;
}

std::uint64_t PlaneGraph::checksum() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(vertex_count()));
    for (int v = 0; v < vertex_count(); ++v) {
        for (char ch : names_[v]) mix(static_cast<unsigned char>(ch));
        mix(0xfeULL);
        for (VertexId w : rotation_[v]) mix(static_cast<std::uint64_t>(w));
        mix(0xffULL);
    }
    mix(static_cast<std::uint64_t>(outer_face_));
    return h;
}

int count_faces_of_size(const PlaneGraph& g, int k) {
    return static_cast<int>(std::count_if(g.faces().begin(), g.faces().end(),
                                          [k](const Face& f) { return f.size() == k; }));
}

std::vector<std::vector<VertexId>> components_without(const PlaneGraph& g,
                                                      const std::vector<char>& removed) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> stack;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (VertexId w : g.rotation(v)) {
                if (!removed[w] && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

namespace {

// Articulation points of G - removed, restricted to one connected piece
// (the caller guarantees G - removed is connected).
std::vector<VertexId> articulation_points(const PlaneGraph& g, const std::vector<char>& removed) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> is_cut(n, 0);
    int timer = 0;
    struct Frame {
        VertexId v;
        int next;
    };
    for (int root = 0; root < n; ++root) {
        if (removed[root] || disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const VertexId v = fr.v;
            auto rot = g.rotation(v);
            if (fr.next < static_cast<int>(rot.size())) {
                VertexId w = rot[fr.next++];
                if (removed[w]) continue;
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    stack.push_back({w, 0});
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    std::vector<VertexId> out;
    for (int v = 0; v < n; ++v) {
        if (is_cut[v]) out.push_back(v);
    }
    return out;
}

bool connected_without(const PlaneGraph& g, const std::vector<char>& removed) {
    return components_without(g, removed).size() <= 1;
}

}  // namespace

bool is_three_connected(const PlaneGraph& g) {
    const int n = g.vertex_count();
    if (n < 4) return false;
    std::vector<char> removed(n, 0);
    for (int a = 0; a < n; ++a) {
        removed[a] = 1;
        if (!connected_without(g, removed)) return false;
        for (int b = a + 1; b < n; ++b) {
            removed[b] = 1;
            const bool ok = connected_without(g, removed);
            removed[b] = 0;
            if (!ok) return false;
        }
        removed[a] = 0;
    }
    return true;
}

std::vector<std::vector<VertexId>> three_separators(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::set<std::vector<VertexId>> found;
    std::vector<char> removed(n, 0);
    for (int a = 0; a < n; ++a) {
        removed[a] = 1;
        for (int b = a + 1; b < n; ++b) {
            removed[b] = 1;
            if (connected_without(g, removed)) {
                for (VertexId x : articulation_points(g, removed)) {
                    std::vector<VertexId> s{a, b, x};
                    std::sort(s.begin(), s.end());
                    found.insert(s);
                }
            }
            removed[b] = 0;
        }
        removed[a] = 0;
    }
    return {found.begin(), found.end()};
}

bool is_four_connected(const PlaneGraph& g) {
    return g.vertex_count() >= 5 && is_three_connected(g) && three_separators(g).empty();
}

bool is_essentially_four_connected(const PlaneGraph& g) {
    if (!is_three_connected(g)) return false;
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    for (const auto& sep : three_separators(g)) {
        for (VertexId v : sep) removed[v] = 1;
        auto comps = components_without(g, removed);
        for (VertexId v : sep) removed[v] = 0;
        if (comps.size() != 2) return false;
        bool ok = false;
        for (const auto& comp : comps) {
            if (comp.size() != 1) continue;
            std::vector<VertexId> nb(g.rotation(comp[0]).begin(), g.rotation(comp[0]).end());
            std::sort(nb.begin(), nb.end());
            if (nb == sep) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

bool is_bipartite(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (int s = 0; s < n; ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.rotation(v)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace isocycle
