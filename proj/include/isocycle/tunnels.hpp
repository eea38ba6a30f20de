#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "isocycle/cycle_analysis.hpp"

namespace isocycle {

enum class Direction { Counterclockwise, Clockwise };

/// A (face, C-edge) pair.
struct FaceEdge {
    FaceId face = -1;
    int edge = -1;

    friend bool operator==(const FaceEdge&, const FaceEdge&) = default;
    friend auto operator<=>(const FaceEdge&, const FaceEdge&) = default;
};

struct TunnelTrack {
    int tunnel = -1;
    Direction direction = Direction::Counterclockwise;
    std::vector<int> arches;  // arch ids, T1 first
    bool cyclic = false;
    FaceEdge exit;
};

struct Tunnel {
    int id = -1;
    /// Arch ids ordered by increasing cycle index (the counterclockwise track).
    std::vector<int> arches;
    bool cyclic = false;
    /// The union of the arches' C-edges in cycle order.
    std::vector<int> edge_union;
    TunnelTrack ccw;
    TunnelTrack cw;
};

struct TunnelSet {
    std::vector<Tunnel> tunnels;
    /// Per arch id: tunnel id, or -1 (not a 3-arch, or ineligible).
    std::vector<int> tunnel_of_arch;
    /// Eligible 3-arches (middle C-edge not on a minor thin 2-face).
    std::vector<int> eligible;

    std::vector<const TunnelTrack*> tracks() const;
};

/// 3-arches A, B are consecutive when their archways share exactly one C-edge.
bool arches_consecutive(const CycleAnalysis& a, const Arch& x, const Arch& y);

TunnelSet build_tunnels(const CycleAnalysis& a);

/// False iff the track is cyclic.
bool check_tunnel_acyclic(const TunnelTrack& track);

/// Throws NotInTunnel unless both edges are extremal C-edges of arches of the
/// tunnel and lie on their faces.
bool on_track(const CycleAnalysis& a, const Tunnel& tunnel, FaceEdge p1, FaceEdge p2);

struct TransferPairRecord {
    FaceEdge pair;
    const TunnelTrack* track = nullptr;
    /// From this pair back to (but excluding) the exit pair.
    std::vector<FaceEdge> chain;
    int arch = -1;
};

/// Recursive transfer-pair evaluation with memoisation per (face, edge, track).
class TransferPairOracle {
public:
    TransferPairOracle(const CycleAnalysis& a, const TunnelSet& t, bool strict_same_tunnel = true)
        : a_(a), t_(t), strict_(strict_same_tunnel) {}

    std::optional<TransferPairRecord> query(FaceEdge p, const TunnelTrack& track);
    /// The pair is a transfer pair of some acyclic track.
    std::optional<TransferPairRecord> query_any(FaceEdge p);
    /// All transfer pairs of a track, in recursion order from the exit.
    std::vector<TransferPairRecord> all(const TunnelTrack& track);

private:
    const CycleAnalysis& a_;
    const TunnelSet& t_;
    bool strict_;
    std::map<std::tuple<FaceId, int, const TunnelTrack*>, std::optional<TransferPairRecord>> memo_;
};

nlohmann::json tunnels_to_json(const CycleAnalysis& a, const TunnelSet& t, TransferPairOracle& oracle);

}  // namespace isocycle
