#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "isocycle/cycle_analysis.hpp"
#include "isocycle/discharging.hpp"
#include "isocycle/tunnels.hpp"

namespace isocycle {

/// Replacement of parts of C. Removed paths are subpaths of C; inserted
/// paths are paths of G. `result` is the cycle the move produces.
struct ExtensionMove {
    std::vector<std::vector<VertexId>> removed;
    std::vector<std::vector<VertexId>> inserted;
    std::vector<VertexId> added_vertices;
    std::string pattern_tag;
    int start_edge = -1;
    std::vector<VertexId> result;

    int added() const { return static_cast<int>(added_vertices.size()); }
};

/// min{floor(2(n+4)/3), n}.
int length_bound(int n);
/// 3 + n5(G): the largest growth a single move may need.
int extension_budget(const PlaneGraph& g);

/// Describes the passage from cycle `from` to cycle `to` as a move.
ExtensionMove diff_move(const std::vector<VertexId>& from, const std::vector<VertexId>& to,
                        std::string tag = {}, int start_edge = -1);

/// Rebuilds the cycle from removed/inserted paths; throws InvalidMove when the
/// paths are not in G, the result is not one cycle, or nothing is added.
std::vector<VertexId> apply_move(const PlaneGraph& g, const std::vector<VertexId>& cycle,
                                 const ExtensionMove& move);

struct FastOptions {
    int max_window = 8;      // C-edges per rerouted window in the scan
    int tunnel_window = 16;  // C-edges for tunnel-driven windows
    int whole_cycle_limit = 48;
};

/// Tier 1: catalog patterns, in selection order (added count, pattern id,
/// start edge): "E0", "deficit-reroute", "scan-reroute", "tunnel-reroute".
std::optional<ExtensionMove> find_extension_fast(const CycleAnalysis& a, const TunnelSet* tunnels,
                                                 const WeightLedger* ledger, FastOptions opt = {});

/// Tier 2: smallest S with a cycle on exactly V(C) + S, |S| <= 3 + n5.
std::optional<ExtensionMove> find_extension_exhaustive(const PlaneGraph& g, const std::vector<VertexId>& cycle);

struct GrowthStep {
    int length_before = 0;
    int length_after = 0;
    bool tier2 = false;
    ExtensionMove move;
};

struct GrowthTrace {
    std::vector<VertexId> initial;
    std::vector<GrowthStep> steps;
    std::vector<VertexId> final_cycle;
    int bound = 0;
    int tier1_moves = 0;
    int tier2_moves = 0;

    double fallback_rate() const {
        const int total = tier1_moves + tier2_moves;
        return total == 0 ? 0.0 : static_cast<double>(tier2_moves) / total;
    }
};

struct GrowOptions {
    bool tier1 = true;
    bool tier2 = true;
    bool strict_transfer = true;
    FastOptions fast;
    /// Called after each applied step.
    std::function<void(const GrowthStep&, const std::vector<VertexId>&)> on_step;
};

/// Extends until the length bound. Throws ExtensionNotFound if both tiers fail.
GrowthTrace grow_to_bound(const PlaneGraph& g, const std::vector<VertexId>& cycle, GrowOptions opt = {});

/// One step: tier 1 (unless disabled) then tier 2.
std::optional<GrowthStep> extend_once(const PlaneGraph& g, const std::vector<VertexId>& cycle,
                                      const GrowOptions& opt = {});

nlohmann::json move_to_json(const PlaneGraph& g, const ExtensionMove& m);
nlohmann::json trace_to_json(const PlaneGraph& g, const GrowthTrace& t);

}  // namespace isocycle
