#include "isocycle/cycle_analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace isocycle {

CycleOnGraph::CycleOnGraph(const PlaneGraph& g, std::vector<VertexId> vertices)
    : host_(&g), vertices_(std::move(vertices)), position_(g.vertex_count(), -1) {
    const int c = length();
    if (c < 3) throw Error(ErrorKind::ContractViolation, "a cycle needs at least 3 vertices");
    for (int i = 0; i < c; ++i) {
        const VertexId v = vertices_[i];
        if (v < 0 || v >= g.vertex_count()) {
            throw Error(ErrorKind::ContractViolation, "cycle vertex out of range");
        }
        if (position_[v] >= 0) {
            throw Error(ErrorKind::ContractViolation, "cycle repeats vertex " + g.name(v));
        }
        position_[v] = i;
    }
    for (int i = 0; i < c; ++i) {
        if (!g.adjacent(vertices_[i], vertices_[(i + 1) % c])) {
            throw Error(ErrorKind::ContractViolation, "cycle uses non-edge " + g.name(vertices_[i]) +
                                                          "-" + g.name(vertices_[(i + 1) % c]));
        }
    }
}

int CycleOnGraph::edge_index(VertexId u, VertexId v) const {
    const int i = position_[u], j = position_[v];
    if (i < 0 || j < 0) return -1;
    if (wrap(i + 1) == j) return i;
    if (wrap(j + 1) == i) return j;
    return -1;
}

bool is_isolating(const PlaneGraph& g, const CycleOnGraph& cyc) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (cyc.contains(v)) continue;
        for (VertexId w : g.rotation(v)) {
            if (!cyc.contains(w)) return false;
        }
    }
    return true;
}

RegionPartition partition_regions(const PlaneGraph& g, const CycleOnGraph& cyc) {
    if (!is_isolating(g, cyc)) throw Error(ErrorKind::ContractViolation, "cycle is not isolating");
    const int c = cyc.length();
    std::vector<int> fan_of(g.vertex_count(), -1);
    for (int i = 0; i < c; ++i) {
        const VertexId v = cyc.at(i), p = cyc.at(i - 1), s = cyc.at(i + 1);
        auto rot = g.rotation(v);
        const int deg = static_cast<int>(rot.size());
        const int ip = g.rotation_index(g.dart(v, p));
        int fan = 0;
        for (int k = 1; k < deg; ++k) {
            const VertexId w = rot[(ip + k) % deg];
            if (w == s) {
                fan = 1;
                continue;
            }
            if (cyc.contains(w)) continue;
            if (fan_of[w] >= 0 && fan_of[w] != fan) {
                throw Error(ErrorKind::ContractViolation,
                            "vertex " + g.name(w) + " seen on both sides of the cycle");
            }
            fan_of[w] = fan;
        }
    }
    std::vector<VertexId> fans[2];
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!cyc.contains(v)) fans[fan_of[v]].push_back(v);
    }
    RegionPartition part;
    if (fans[0].size() != fans[1].size()) {
        part.minus_fan = fans[0].size() < fans[1].size() ? 0 : 1;
    } else if (!fans[0].empty()) {
        part.minus_fan = fans[0].front() < fans[1].front() ? 0 : 1;
    } else {
        part.minus_fan = 0;
    }
    part.v_minus = fans[part.minus_fan];
    part.v_plus = fans[1 - part.minus_fan];
    part.side_of.assign(g.vertex_count(), -1);
    for (VertexId v : part.v_minus) part.side_of[v] = kMinus;
    for (VertexId v : part.v_plus) part.side_of[v] = kPlus;
    return part;
}

namespace {

// Fan (0 = A, 1 = B) of neighbour w at cycle position i.
int fan_at(const PlaneGraph& g, const CycleOnGraph& cyc, int i, VertexId w) {
    const VertexId v = cyc.at(i), p = cyc.at(i - 1), s = cyc.at(i + 1);
    auto rot = g.rotation(v);
    const int deg = static_cast<int>(rot.size());
    const int ip = g.rotation_index(g.dart(v, p));
    for (int k = 1; k < deg; ++k) {
        const VertexId x = rot[(ip + k) % deg];
        if (x == s) return 1;
        if (x == w) return 0;
    }
    return 1;
}

}  // namespace

PrunedGraph build_pruned(const PlaneGraph& g, const CycleOnGraph& cyc, const RegionPartition& part) {
    PrunedGraph out;
    std::map<Edge, int> chord_side;
    for (const Edge& e : g.edges()) {
        if (!cyc.contains(e.u) || !cyc.contains(e.v) || cyc.is_cycle_edge(e.u, e.v)) continue;
        const int side = part.fan_to_side(fan_at(g, cyc, cyc.index_of(e.u), e.v));
        out.chords.emplace_back(e, side);
        chord_side[e] = side;
    }
    const bool minus_empty = part.v_minus.empty();
    const bool plus_empty = part.v_plus.empty();
    for (const auto& [e, side] : out.chords) {
        if (!minus_empty || plus_empty || side == kPlus) out.deleted_chords.push_back(e);
    }
    out.h = g.without_edges(out.deleted_chords);

    const PlaneGraph& h = out.h;
    out.face_side.assign(h.face_count(), -1);
    for (const Face& f : h.faces()) {
        int side = -1;
        for (DartId d : f.darts) {
            const VertexId u = h.tail(d), v = h.head(d);
            int s = -1;
            if (!cyc.contains(u)) {
                s = part.side_of[u];
            } else if (!cyc.contains(v)) {
                s = part.side_of[v];
            } else if (cyc.is_cycle_edge(u, v)) {
                const bool forward = cyc.wrap(cyc.index_of(u) + 1) == cyc.index_of(v);
                s = part.fan_to_side(forward ? 0 : 1);
            } else {
                s = chord_side.at(Edge(u, v));
            }
            if (side >= 0 && s != side) {
                throw Error(ErrorKind::ContractViolation, "face of H straddles the cycle");
            }
            side = s;
        }
        out.face_side[f.id] = side;
    }
    return out;
}

bool FaceInfo::has_c_edge(int e) const {
    return std::binary_search(c_edges.begin(), c_edges.end(), e);
}

std::vector<FaceInfo> classify_faces(const PrunedGraph& pruned, const CycleOnGraph& cyc,
                                     const RegionPartition& part) {
    const PlaneGraph& h = pruned.h;
    const int c = cyc.length();
    std::vector<FaceInfo> out;
    out.reserve(h.face_count());
    for (const Face& face : h.faces()) {
        FaceInfo info;
        info.id = face.id;
        info.side = pruned.face_side[face.id];
        std::set<int> cedges;
        std::set<VertexId> off;
        std::set<Edge> other;
        for (DartId d : face.darts) {
            const VertexId u = h.tail(d), v = h.head(d);
            const int e = cyc.edge_index(u, v);
            if (e >= 0) {
                cedges.insert(e);
            } else {
                other.insert(Edge(u, v));
            }
            if (!cyc.contains(u)) off.insert(u);
        }
        info.c_edges.assign(cedges.begin(), cedges.end());
        info.off_vertices.assign(off.begin(), off.end());
        info.m = static_cast<int>(info.c_edges.size());
        info.non_c_edges = static_cast<int>(other.size());
        info.thin = part.v_minus.empty() && info.side == kMinus;
        info.minor = info.thin ? info.non_c_edges == 1 : info.off_vertices.size() == 1;
        if (info.minor && !info.thin) info.v_f = info.off_vertices.front();
        if (info.minor && info.m > 0) {
            if (info.m == c) {
                info.run_start = 0;
            } else {
                for (int e : info.c_edges) {
                    if (!cedges.count(cyc.wrap(e - 1))) {
                        if (info.run_start >= 0) {
                            throw Error(ErrorKind::ContractViolation,
                                        "minor face with non-consecutive C-edges");
                        }
                        info.run_start = e;
                    }
                }
            }
        }
        out.push_back(std::move(info));
    }
    return out;
}

std::vector<int> ExtensionTree::degrees() const {
    std::vector<int> deg(nodes.size(), 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

bool ExtensionTree::is_tree() const {
    const int n = static_cast<int>(nodes.size());
    if (n == 0 || static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) {
        const int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

std::vector<int> ExtensionTree::leaves() const {
    std::vector<int> out;
    const auto deg = degrees();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (deg[i] == 1) out.push_back(static_cast<int>(i));
    }
    return out;
}

namespace {

ExtensionTree build_side_tree(const PrunedGraph& pruned, const RegionPartition& part,
                              const std::vector<FaceInfo>& faces, int side) {
    const PlaneGraph& h = pruned.h;
    const auto& side_vertices = side == kMinus ? part.v_minus : part.v_plus;
    ExtensionTree t;
    t.side = side;
    if (side_vertices.empty()) {
        t.weak_dual = true;
        std::map<FaceId, int> node_of;
        for (const FaceInfo& f : faces) {
            if (f.side != side) continue;
            node_of[f.id] = static_cast<int>(t.nodes.size());
            t.nodes.push_back({TreeNode::Kind::Face, f.id});
        }
        if (t.nodes.size() < 2) {
            throw Error(ErrorKind::DegenerateSide, "side has a single face; the cycle is spanning");
        }
        for (const Edge& e : h.edges()) {
            const DartId d = h.dart(e.u, e.v);
            const FaceId a = h.face_of(d), b = h.face_of(h.twin(d));
            if (a == b || !node_of.count(a) || !node_of.count(b)) continue;
            t.edges.emplace_back(node_of[a], node_of[b]);
        }
        return t;
    }
    std::map<VertexId, int> vnode;
    for (const FaceInfo& f : faces) {
        if (f.side == side && f.minor) t.nodes.push_back({TreeNode::Kind::Face, f.id});
    }
    for (VertexId v : side_vertices) {
        vnode[v] = static_cast<int>(t.nodes.size());
        t.nodes.push_back({TreeNode::Kind::Vertex, v});
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        if (t.nodes[i].kind != TreeNode::Kind::Face) continue;
        t.edges.emplace_back(static_cast<int>(i), vnode.at(faces[t.nodes[i].id].v_f));
    }
    for (const FaceInfo& f : faces) {
        if (f.side != side || f.minor || f.off_vertices.empty()) continue;
        const VertexId root = f.off_vertices.front();
        for (std::size_t k = 1; k < f.off_vertices.size(); ++k) {
            t.edges.emplace_back(vnode.at(root), vnode.at(f.off_vertices[k]));
        }
    }
    return t;
}

}  // namespace

std::pair<ExtensionTree, ExtensionTree> build_extension_trees(const PrunedGraph& pruned,
                                                              const RegionPartition& part,
                                                              const std::vector<FaceInfo>& faces) {
    return {build_side_tree(pruned, part, faces, kMinus), build_side_tree(pruned, part, faces, kPlus)};
}

std::vector<Arch> enumerate_arches(const PlaneGraph& g, const CycleOnGraph& cyc,
                                   const PrunedGraph& pruned, const std::vector<FaceInfo>& faces) {
    const PlaneGraph& h = pruned.h;
    std::vector<Arch> out;
    for (const FaceInfo& f : faces) {
        if (!f.minor || f.m == 0) continue;
        Arch a;
        a.face = f.id;
        a.proper = true;
        a.thick = !f.thin;
        a.start = f.run_start;
        a.m = f.m;
        a.path.push_back(cyc.at(f.run_start));
        if (!f.thin) a.path.push_back(f.v_f);
        a.path.push_back(cyc.at(f.run_start + f.m));
        out.push_back(std::move(a));
    }
    std::set<Edge> deleted(pruned.deleted_chords.begin(), pruned.deleted_chords.end());
    for (const Edge& chord : pruned.deleted_chords) {
        const VertexId u = chord.u, w = chord.v;
        auto rot = g.rotation(u);
        const int deg = static_cast<int>(rot.size());
        const int iw = g.rotation_index(g.dart(u, w));
        VertexId a = -1;
        for (int k = 1; k < deg; ++k) {
            const VertexId x = rot[(iw - k + deg) % deg];
            if (!deleted.count(Edge(u, x))) {
                a = x;
                break;
            }
        }
        if (a < 0) continue;
        const FaceId fid = h.face_of(h.dart(a, u));
        const FaceInfo& f = faces[fid];
        if (!f.minor || f.m == 0) continue;
        const int pu = cyc.wrap(cyc.index_of(u) - f.run_start);
        const int pw = cyc.wrap(cyc.index_of(w) - f.run_start);
        if (pu > f.m || pw > f.m) continue;
        const int lo = std::min(pu, pw), hi = std::max(pu, pw);
        if (hi - lo == f.m) continue;  // joins the extremal C-vertices
        Arch arch;
        arch.face = fid;
        arch.proper = false;
        arch.thick = !f.thin;
        arch.start = cyc.wrap(f.run_start + lo);
        arch.m = hi - lo;
        arch.path = {cyc.at(arch.start), cyc.at(arch.start + arch.m)};
        out.push_back(std::move(arch));
    }
    std::stable_sort(out.begin(), out.end(), [](const Arch& x, const Arch& y) {
        if (x.face != y.face) return x.face < y.face;
        if (x.proper != y.proper) return x.proper;
        return x.start < y.start;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
    return out;
}

int CycleAnalysis::shared_edges(FaceId f, FaceId g) const {
    const auto& a = faces[f].c_edges;
    const auto& b = faces[g].c_edges;
    int count = 0;
    for (int e : a) count += std::binary_search(b.begin(), b.end(), e);
    return count;
}

bool CycleAnalysis::arch_has_edge(const Arch& a, int e) const {
    return cycle.wrap(e - a.start) < a.m;
}

int CycleAnalysis::shared_edges_arch(FaceId f, const Arch& a) const {
    int count = 0;
    for (int k = 0; k < a.m; ++k) count += faces[f].has_c_edge(cycle.wrap(a.start + k));
    return count;
}

std::vector<FaceId> CycleAnalysis::minor_faces(int side) const {
    std::vector<FaceId> out;
    for (const FaceInfo& f : faces) {
        if (f.minor && f.side == side) out.push_back(f.id);
    }
    return out;
}

bool CycleAnalysis::has_minor_one_face() const {
    return std::any_of(faces.begin(), faces.end(),
                       [](const FaceInfo& f) { return f.minor && f.m == 1; });
}

bool CycleAnalysis::is_extremal_edge(FaceId f, int e) const {
    const FaceInfo& info = faces[f];
    e = cycle.wrap(e);
    if (!info.has_c_edge(e)) return false;
    return !(info.has_c_edge(cycle.wrap(e - 1)) && info.has_c_edge(cycle.wrap(e + 1)));
}

CycleAnalysis analyze_cycle(const PlaneGraph& g, const std::vector<VertexId>& cycle) {
    CycleAnalysis a;
    a.cycle = CycleOnGraph(g, cycle);
    a.part = partition_regions(g, a.cycle);
    a.pruned = build_pruned(g, a.cycle, a.part);
    a.faces = classify_faces(a.pruned, a.cycle, a.part);
    a.arches = enumerate_arches(g, a.cycle, a.pruned, a.faces);
    if (!a.hamiltonian()) {
        try {
            auto [tm, tp] = build_extension_trees(a.pruned, a.part, a.faces);
            a.t_minus = std::move(tm);
            a.t_plus = std::move(tp);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateSide) throw;
            a.degenerate_side = true;
        }
    }
    const int c = a.c();
    const PlaneGraph& h = a.pruned.h;
    for (int side = 0; side < 2; ++side) a.edge_face_[side].assign(c, -1);
    for (int i = 0; i < c; ++i) {
        const DartId d = h.dart(a.cycle.at(i), a.cycle.at(i + 1));
        a.edge_face_[a.part.fan_to_side(0)][i] = h.face_of(d);
        a.edge_face_[a.part.fan_to_side(1)][i] = h.face_of(h.twin(d));
    }
    a.arches_of_face_.assign(a.faces.size(), {});
    for (const Arch& arch : a.arches) a.arches_of_face_[arch.face].push_back(arch.id);
    return a;
}

TreeCheck check_trees(const CycleAnalysis& a) {
    TreeCheck out;
    auto fail = [&out](std::string msg) {
        out.ok = false;
        out.failures.push_back(std::move(msg));
    };
    for (int side = 0; side < 2; ++side) {
        const auto& tree = side == kMinus ? a.t_minus : a.t_plus;
        const std::string tag = side == kMinus ? "T-" : "T+";
        if (!tree) {
            if (a.degenerate_side) {
                fail(tag + " absent: degenerate side");
            } else if (!a.hamiltonian()) {
                fail(tag + " missing");
            }
            continue;
        }
        if (!tree->is_tree()) fail(tag + " is not a tree");
        if (tree->nodes.size() < 3) fail(tag + " has fewer than three nodes");
        std::vector<FaceId> leaf_faces;
        for (int i : tree->leaves()) {
            if (tree->nodes[i].kind != TreeNode::Kind::Face) {
                fail(tag + " has a vertex leaf");
            } else {
                leaf_faces.push_back(tree->nodes[i].id);
            }
        }
        std::sort(leaf_faces.begin(), leaf_faces.end());
        const auto minors = a.minor_faces(side);
        if (leaf_faces != minors) fail(tag + " leaf set differs from the minor faces");
        const auto& vs = side == kMinus ? a.part.v_minus : a.part.v_plus;
        if (minors.size() < vs.size() + 2) fail(tag + ": |M| < |V| + 2");
        const auto deg = tree->degrees();
        if (!vs.empty() && std::count(deg.begin(), deg.end(), 2) > 0) fail(tag + " has a degree-2 node");
        // leaves = 2 + sum over deg >= 3 of (deg - 2)
        int predicted = 2;
        for (int d : deg) {
            if (d >= 3) predicted += d - 2;
        }
        if (tree->is_tree() && tree->nodes.size() >= 2 &&
            predicted != static_cast<int>(tree->leaves().size())) {
            fail(tag + " violates the leaf-count formula");
        }
    }
    return out;
}

nlohmann::json analysis_to_json(const CycleAnalysis& a) {
    const PlaneGraph& g = a.graph();
    using nlohmann::json;
    auto names = [&g](const std::vector<VertexId>& vs) {
        json out = json::array();
        for (VertexId v : vs) out.push_back(g.name(v));
        return out;
    };
    json doc;
    doc["n"] = a.n();
    doc["c"] = a.c();
    doc["cycle"] = names(a.cycle.vertices());
    doc["v_minus"] = names(a.part.v_minus);
    doc["v_plus"] = names(a.part.v_plus);
    json chords = json::array();
    for (const Edge& e : a.pruned.deleted_chords) chords.push_back({g.name(e.u), g.name(e.v)});
    doc["deleted_chords"] = std::move(chords);
    json faces = json::array();
    for (const FaceInfo& f : a.faces) {
        json jf;
        jf["id"] = f.id;
        jf["side"] = f.side == kMinus ? "minus" : "plus";
        jf["vertices"] = names(a.pruned.h.face_vertices(f.id));
        jf["m"] = f.m;
        jf["c_edges"] = f.c_edges;
        jf["minor"] = f.minor;
        jf["thin"] = f.thin;
        if (f.v_f >= 0) jf["v_f"] = g.name(f.v_f);
        faces.push_back(std::move(jf));
    }
    doc["faces"] = std::move(faces);
    json arches = json::array();
    for (const Arch& arch : a.arches) {
        arches.push_back({{"id", arch.id},
                          {"face", arch.face},
                          {"proper", arch.proper},
                          {"thick", arch.thick},
                          {"path", names(arch.path)},
                          {"archway_start", arch.start},
                          {"m", arch.m}});
    }
    doc["arches"] = std::move(arches);
    json trees = json::object();
    for (int side = 0; side < 2; ++side) {
        const auto& t = side == kMinus ? a.t_minus : a.t_plus;
        if (!t) continue;
        json jt;
        jt["weak_dual"] = t->weak_dual;
        json nodes = json::array();
        for (const TreeNode& node : t->nodes) {
            if (node.kind == TreeNode::Kind::Face) {
                nodes.push_back("face:" + std::to_string(node.id));
            } else {
                nodes.push_back("vertex:" + g.name(node.id));
            }
        }
        jt["nodes"] = std::move(nodes);
        jt["edges"] = t->edges;
        trees[side == kMinus ? "minus" : "plus"] = std::move(jt);
    }
    doc["trees"] = std::move(trees);
    doc["degenerate_side"] = a.degenerate_side;
    return doc;
}

}  // namespace isocycle
