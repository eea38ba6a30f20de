#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "isocycle/plane_graph.hpp"

namespace isocycle {

/// A cycle of a host graph, stored as its cyclic vertex sequence. C-edge i
/// joins vertices(i) and vertices(i+1 mod c).
class CycleOnGraph {
public:
    CycleOnGraph() = default;
    /// Throws ContractViolation unless the sequence is a cycle of g
    /// (length >= 3, distinct vertices, consecutive vertices adjacent).
    CycleOnGraph(const PlaneGraph& g, std::vector<VertexId> vertices);

    const PlaneGraph& host() const { return *host_; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    int length() const { return static_cast<int>(vertices_.size()); }
    VertexId at(int i) const { return vertices_[wrap(i)]; }
    /// Index on the cycle, -1 if v is not a cycle vertex.
    int index_of(VertexId v) const { return position_[v]; }
    bool contains(VertexId v) const { return position_[v] >= 0; }
    int wrap(int i) const {
        const int c = length();
        return ((i % c) + c) % c;
    }
    /// C-edge index joining adjacent cycle vertices u,v; -1 otherwise.
    int edge_index(VertexId u, VertexId v) const;
    bool is_cycle_edge(VertexId u, VertexId v) const { return edge_index(u, v) >= 0; }

private:
    const PlaneGraph* host_ = nullptr;
    std::vector<VertexId> vertices_;
    std::vector<int> position_;
};

/// Every component of G - V(C) is a single vertex.
bool is_isolating(const PlaneGraph& g, const CycleOnGraph& cyc);

// Side 0 is the minus side, side 1 the plus side.
constexpr int kMinus = 0;
constexpr int kPlus = 1;

struct RegionPartition {
    std::vector<VertexId> v_minus;
    std::vector<VertexId> v_plus;
    /// Geometric side named minus: 0 for the side to the clockwise-right of
    /// the forward traversal ("fan A"), 1 for the other.
    int minus_fan = 0;
    /// Per vertex: -1 on C, otherwise kMinus / kPlus.
    std::vector<int> side_of;

    int fan_to_side(int fan) const { return fan == minus_fan ? kMinus : kPlus; }
};

/// Throws ContractViolation if the cycle is not isolating.
RegionPartition partition_regions(const PlaneGraph& g, const CycleOnGraph& cyc);

struct PrunedGraph {
    PlaneGraph h;
    std::vector<Edge> deleted_chords;
    /// All chords of C in G, with their side.
    std::vector<std::pair<Edge, int>> chords;
    /// Side of every face of h.
    std::vector<int> face_side;
};

PrunedGraph build_pruned(const PlaneGraph& g, const CycleOnGraph& cyc, const RegionPartition& part);

struct FaceInfo {
    FaceId id = -1;
    int side = kMinus;
    int m = 0;                       // number of C-edges
    std::vector<int> c_edges;        // sorted C-edge indices
    std::vector<VertexId> off_vertices;  // incident vertices of V- or V+
    int non_c_edges = 0;             // distinct incident edges not on C
    bool thin = false;
    bool minor = false;
    VertexId v_f = -1;               // minor thick faces only
    // Minor faces: C-edges are run_start, ..., run_start + m - 1 (mod c).
    int run_start = -1;

    bool has_c_edge(int e) const;
};

/// Arch of a minor face. Its archway is the C-edges start .. start+m-1.
struct Arch {
    int id = -1;
    FaceId face = -1;
    bool proper = false;
    bool thick = false;
    std::vector<VertexId> path;
    int start = 0;
    int m = 0;
};

struct TreeNode {
    enum class Kind { Face, Vertex } kind = Kind::Face;
    int id = -1;  // FaceId of h, or VertexId
};

struct ExtensionTree {
    int side = kMinus;
    bool weak_dual = false;
    std::vector<TreeNode> nodes;
    std::vector<std::pair<int, int>> edges;  // node indices

    std::vector<int> degrees() const;
    bool is_tree() const;
    std::vector<int> leaves() const;
};

/// Aggregate of all cycle-relative structure. Keeps a pointer to the host;
/// the host must outlive it.
class CycleAnalysis {
public:
    const PlaneGraph& graph() const { return cycle.host(); }
    int c() const { return cycle.length(); }
    int n() const { return graph().vertex_count(); }
    bool hamiltonian() const { return part.v_minus.empty() && part.v_plus.empty(); }

    /// The face of H on `side` incident to C-edge e.
    FaceId edge_face(int side, int e) const { return edge_face_[side][cycle.wrap(e)]; }
    /// The e-opposite face of f.
    FaceId opposite(FaceId f, int e) const { return edge_face(1 - faces[f].side, e); }
    const std::vector<int>& arches_of_face(FaceId f) const { return arches_of_face_[f]; }
    /// Number of C-edges two faces/arches share.
    int shared_edges(FaceId f, FaceId g) const;
    int shared_edges_arch(FaceId f, const Arch& a) const;
    bool arch_has_edge(const Arch& a, int e) const;
    /// Minor faces of a side, by id.
    std::vector<FaceId> minor_faces(int side) const;
    bool has_minor_one_face() const;
    /// Extremal C-edges of a face (edges with at most one neighbouring C-edge on it).
    bool is_extremal_edge(FaceId f, int e) const;
    VertexId cycle_vertex(int i) const { return cycle.at(i); }

    CycleOnGraph cycle;
    RegionPartition part;
    PrunedGraph pruned;
    std::vector<FaceInfo> faces;
    std::vector<Arch> arches;
    std::optional<ExtensionTree> t_minus;
    std::optional<ExtensionTree> t_plus;
    /// Trees are absent because an empty side has a single face.
    bool degenerate_side = false;

private:
    friend CycleAnalysis analyze_cycle(const PlaneGraph&, const std::vector<VertexId>&);
    std::vector<int> edge_face_[2];
    std::vector<std::vector<int>> arches_of_face_;
};

std::vector<FaceInfo> classify_faces(const PrunedGraph& pruned, const CycleOnGraph& cyc,
                                     const RegionPartition& part);

/// Throws DegenerateSide when a side yields a single node (Hamiltonian cycles).
std::pair<ExtensionTree, ExtensionTree> build_extension_trees(const PrunedGraph& pruned,
                                                              const RegionPartition& part,
                                                              const std::vector<FaceInfo>& faces);

std::vector<Arch> enumerate_arches(const PlaneGraph& g, const CycleOnGraph& cyc,
                                   const PrunedGraph& pruned, const std::vector<FaceInfo>& faces);

/// Full analysis. Throws ContractViolation when the cycle is invalid or not
/// isolating. Trees are absent for Hamiltonian cycles and degenerate sides.
CycleAnalysis analyze_cycle(const PlaneGraph& g, const std::vector<VertexId>& cycle);

struct TreeCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Tree shape, leaf sets, |M| >= |V| + 2, and the degree-2 rule, per side.
TreeCheck check_trees(const CycleAnalysis& a);

nlohmann::json analysis_to_json(const CycleAnalysis& a);

}  // namespace isocycle
