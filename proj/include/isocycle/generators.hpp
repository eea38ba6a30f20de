#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "isocycle/plane_graph.hpp"

namespace isocycle {

/// Recipe for a reproducible instance. Same recipe, same graph.
struct InstanceRecipe {
    std::string family;        // "named", "insertion", "random-triangulation", "random-e4c"
    std::string name;          // named graph, or insertion base
    int n = 0;                 // size for random families
    std::uint64_t seed = 0;
    bool four_connected = false;
    int sparsify = 0;          // random-e4c: edge deletions attempted

    nlohmann::json to_json() const;
    static InstanceRecipe from_json(const nlohmann::json& doc);
    std::string label() const;
};

/// K4, octahedron, cube, wheel(k), prism(k) (prism = prism(3)).
PlaneGraph named_graph(const std::string& name);

/// Places a new degree-3 vertex in every face of a 4-connected triangulation.
/// A nonzero seed permutes the vertex order of the result.
PlaneGraph gen_insertion_family(const PlaneGraph& base, std::uint64_t seed = 0);

/// Maximal planar graph on n vertices. Without the flag: iterated random
/// face insertion starting from K4. With the flag: a random walk of edge
/// flips starting at the double wheel, rejecting flips that would create a
/// separating triangle.
PlaneGraph gen_random_triangulation(int n, std::uint64_t seed, bool require_four_connected);

/// Essentially 4-connected graph on n vertices: a random 4-connected
/// triangulation with degree-3 vertices stacked into distinct faces, then up
/// to `sparsify` edge deletions that keep essential 4-connectedness.
PlaneGraph gen_random_e4c(int n, std::uint64_t seed, int sparsify = 0);

PlaneGraph realize(const InstanceRecipe& recipe);

/// The rotation system of a straight-line drawing (neighbours clockwise).
std::vector<std::vector<VertexId>> rotation_from_coordinates(
    const std::vector<std::pair<double, double>>& coords,
    const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Same graph with vertex i renamed/reindexed to perm[i].
PlaneGraph relabel(const PlaneGraph& g, const std::vector<VertexId>& perm);

}  // namespace isocycle
