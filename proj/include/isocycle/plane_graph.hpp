#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isocycle/error.hpp"

namespace isocycle {

using VertexId = int;
using DartId = int;
using FaceId = int;

struct Edge {
    VertexId u;
    VertexId v;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Face {
    FaceId id = -1;
    std::vector<DartId> darts;  // closed walk, in traversal order

    int size() const { return static_cast<int>(darts.size()); }
};

/// Simple connected graph with a fixed rotation system.
///
/// Vertices are dense indices 0..n-1 carrying opaque string names. The
/// rotation of a vertex lists its neighbours clockwise. Directed edges
/// ("darts") are numbered by position in the rotation lists. Faces are traced
/// with the rule: after dart (u,v) comes (v,w), where w follows u in the
/// rotation of v. The object is immutable after construction.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Validates and traces faces. Throws Error with kind InconsistentRotation,
    /// NotSimple, Disconnected or NonPlanarEmbedding.
    static PlaneGraph build(std::vector<std::string> names,
                            std::vector<std::vector<VertexId>> rotation,
                            std::optional<std::vector<VertexId>> outer_face = std::nullopt);

    /// Same as build() with names "0".."n-1".
    static PlaneGraph from_rotation(std::vector<std::vector<VertexId>> rotation);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return static_cast<int>(dart_head_.size()) / 2; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int dart_count() const { return static_cast<int>(dart_head_.size()); }

    const std::string& name(VertexId v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<VertexId> find(const std::string& name) const;

    std::span<const VertexId> rotation(VertexId v) const { return rotation_[v]; }
    const std::vector<std::vector<VertexId>>& rotations() const { return rotation_; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

    bool adjacent(VertexId u, VertexId v) const { return dart(u, v) >= 0; }
    /// Dart u->v or -1.
    DartId dart(VertexId u, VertexId v) const;
    VertexId tail(DartId d) const { return dart_tail_[d]; }
    VertexId head(DartId d) const { return dart_head_[d]; }
    DartId twin(DartId d) const { return twin_[d]; }
    DartId next_in_face(DartId d) const { return next_[d]; }
    FaceId face_of(DartId d) const { return face_of_[d]; }
    /// Position of the dart in the rotation of its tail.
    int rotation_index(DartId d) const { return d - offset_[dart_tail_[d]]; }
    DartId first_dart(VertexId v) const { return offset_[v]; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(FaceId f) const { return faces_[f]; }
    std::vector<VertexId> face_vertices(FaceId f) const;
    FaceId outer_face() const { return outer_face_; }

    std::vector<Edge> edges() const;

    /// Copy of this graph without the given edges; faces are re-traced.
    PlaneGraph without_edges(const std::vector<Edge>& removed) const;

    /// FNV-1a over names and rotations; identical graphs have identical sums.
    std::uint64_t checksum() const;

    friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
        return a.names_ == b.names_ && a.rotation_ == b.rotation_ &&
               a.outer_face_ == b.outer_face_;
    }

private:
    void index_darts();
    void trace_faces();

    std::vector<std::string> names_;
    std::vector<std::vector<VertexId>> rotation_;
    std::vector<int> offset_;
    std::vector<VertexId> dart_tail_;
    std::vector<VertexId> dart_head_;
    std::vector<DartId> twin_;
    std::vector<DartId> next_;
    std::vector<FaceId> face_of_;
    std::vector<std::vector<std::pair<VertexId, int>>> sorted_nbrs_;
    std::vector<Face> faces_;
    FaceId outer_face_ = 0;
};

/// Number of faces whose boundary walk has exactly k edges.
int count_faces_of_size(const PlaneGraph& g, int k);

/// True iff |V| >= 4 and no vertex set of size <= 2 separates the graph.
bool is_three_connected(const PlaneGraph& g);

/// True iff |V| >= 5 and no vertex set of size <= 3 separates the graph.
bool is_four_connected(const PlaneGraph& g);

/// 3-connected, and every 3-separator S is N(v) for a vertex v such that
/// G-S has exactly the two components {v} and the rest.
bool is_essentially_four_connected(const PlaneGraph& g);

/// All 3-separators (sorted triples), found via articulation points after
/// removing each vertex pair.
std::vector<std::vector<VertexId>> three_separators(const PlaneGraph& g);

/// Components of G - removed, as vertex lists (removed[v] != 0 means deleted).
std::vector<std::vector<VertexId>> components_without(const PlaneGraph& g,
                                                      const std::vector<char>& removed);

bool is_bipartite(const PlaneGraph& g);

}  // namespace isocycle
