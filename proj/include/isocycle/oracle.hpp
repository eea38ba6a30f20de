#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "isocycle/plane_graph.hpp"

namespace isocycle {

/// Largest n accepted by the exact oracles.
constexpr int kOracleLimit = 40;

/// Exact circumference by branch and bound. Throws TooLarge above `limit`.
int oracle_circumference(const PlaneGraph& g, int limit = kOracleLimit);

/// Rotates and reflects so the cycle starts at its smallest vertex and the
/// second vertex is smaller than the last.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);

/// Isolating cycles of g (canonical, sorted), optionally of one length, at
/// most `cap` of them. Lengths are visited in increasing order.
std::vector<std::vector<VertexId>> oracle_isolating_cycles(const PlaneGraph& g,
                                                           std::optional<int> length = std::nullopt,
                                                           std::size_t cap = static_cast<std::size_t>(-1),
                                                           int limit = kOracleLimit);

/// A Hamiltonian cycle of G[vertices], if one exists. `node_budget` bounds
/// the search (0 = unbounded); exhausting it returns nullopt.
std::optional<std::vector<VertexId>> hamiltonian_cycle_on(const PlaneGraph& g,
                                                          const std::vector<VertexId>& vertices,
                                                          long long node_budget = 0);

/// A Hamiltonian path of G[vertices] from s to t.
std::optional<std::vector<VertexId>> hamiltonian_path_on(const PlaneGraph& g,
                                                         const std::vector<VertexId>& vertices,
                                                         VertexId s, VertexId t,
                                                         long long node_budget = 0);

/// Calls `visit` for every Hamiltonian cycle of G[vertices] (each once,
/// canonical); stop early by returning false.
void for_each_hamiltonian_cycle(const PlaneGraph& g, const std::vector<VertexId>& vertices,
                                const std::function<bool(const std::vector<VertexId>&)>& visit);

}  // namespace isocycle
