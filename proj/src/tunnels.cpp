#include "isocycle/tunnels.hpp"

#include <algorithm>
#include <numeric>

namespace isocycle {

std::vector<const TunnelTrack*> TunnelSet::tracks() const {
    std::vector<const TunnelTrack*> out;
    for (const Tunnel& t : tunnels) {
        out.push_back(&t.ccw);
        out.push_back(&t.cw);
    }
    return out;
}

bool arches_consecutive(const CycleAnalysis& a, const Arch& x, const Arch& y) {
    if (x.id == y.id) return false;
    int shared = 0;
    for (int k = 0; k < x.m; ++k) shared += a.arch_has_edge(y, x.start + k);
    return shared == 1;
}

namespace {

bool on_minor_thin_two_face(const CycleAnalysis& a, int e) {
    for (int side = 0; side < 2; ++side) {
        const FaceInfo& f = a.faces[a.edge_face(side, e)];
        if (f.minor && f.thin && f.m == 2) return true;
    }
    return false;
}

}  // namespace

TunnelSet build_tunnels(const CycleAnalysis& a) {
    TunnelSet out;
    out.tunnel_of_arch.assign(a.arches.size(), -1);
    for (const Arch& arch : a.arches) {
        if (arch.m == 3 && !on_minor_thin_two_face(a, arch.start + 1)) out.eligible.push_back(arch.id);
    }
    const int k = static_cast<int>(out.eligible.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (arches_consecutive(a, a.arches[out.eligible[i]], a.arches[out.eligible[j]])) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(k, -1);
    for (int i = 0; i < k; ++i) {
        const int r = find(i);
        if (group_of[r] < 0) {
            group_of[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[group_of[r]].push_back(out.eligible[i]);
    }
    for (const auto& members : groups) {
        auto successor = [&](int id) {
            const int want = a.cycle.wrap(a.arches[id].start + 2);
            for (int other : members) {
                if (a.arches[other].start == want && arches_consecutive(a, a.arches[id], a.arches[other])) {
                    return other;
                }
            }
            return -1;
        };
        std::vector<int> has_pred(a.arches.size(), 0);
        for (int id : members) {
            const int s = successor(id);
            if (s >= 0) has_pred[s] = 1;
        }
        int first = -1;
        for (int id : members) {
            if (!has_pred[id] && (first < 0 || a.arches[id].start < a.arches[first].start)) first = id;
        }
        if (first < 0) {
            first = *std::min_element(members.begin(), members.end(), [&](int x, int y) {
                return a.arches[x].start < a.arches[y].start;
            });
        }
        Tunnel t;
        t.id = static_cast<int>(out.tunnels.size());
        for (int cur = first; cur >= 0;) {
            t.arches.push_back(cur);
            const int s = successor(cur);
            if (s == first) break;
            cur = s;
        }
        if (t.arches.size() != members.size()) {
            throw Error(ErrorKind::ContractViolation, "tunnel arches do not form a chain");
        }
        const int len = static_cast<int>(t.arches.size());
        t.cyclic = len >= 3 && arches_consecutive(a, a.arches[t.arches.back()], a.arches[t.arches.front()]);
        const int span = t.cyclic ? std::min(2 * len, a.c()) : 2 * len + 1;
        for (int i = 0; i < span; ++i) t.edge_union.push_back(a.cycle.wrap(a.arches[first].start + i));

        t.ccw.tunnel = t.cw.tunnel = t.id;
        t.ccw.direction = Direction::Counterclockwise;
        t.cw.direction = Direction::Clockwise;
        t.ccw.cyclic = t.cw.cyclic = t.cyclic;
        t.ccw.arches = t.arches;
        t.cw.arches.assign(t.arches.rbegin(), t.arches.rend());
        const Arch& a1 = a.arches[t.arches.front()];
        const Arch& ak = a.arches[t.arches.back()];
        t.ccw.exit = {a.opposite(a1.face, a1.start), a1.start};
        const int ek = a.cycle.wrap(ak.start + 2);
        t.cw.exit = {a.opposite(ak.face, ek), ek};
        for (int id : t.arches) out.tunnel_of_arch[id] = t.id;
        out.tunnels.push_back(std::move(t));
    }
    return out;
}

bool check_tunnel_acyclic(const TunnelTrack& track) { return !track.cyclic; }

namespace {

bool is_tunnel_extremal(const CycleAnalysis& a, const Tunnel& t, int e) {
    for (int id : t.arches) {
        const Arch& x = a.arches[id];
        if (a.cycle.wrap(x.start) == e || a.cycle.wrap(x.start + 2) == e) return true;
    }
    return false;
}

int union_position(const Tunnel& t, int e) {
    auto it = std::find(t.edge_union.begin(), t.edge_union.end(), e);
    return it == t.edge_union.end() ? -1 : static_cast<int>(it - t.edge_union.begin());
}

}  // namespace

bool on_track(const CycleAnalysis& a, const Tunnel& t, FaceEdge p1, FaceEdge p2) {
    for (FaceEdge p : {p1, p2}) {
        const int e = a.cycle.wrap(p.edge);
        if (p.face < 0 || !is_tunnel_extremal(a, t, e) || !a.faces[p.face].has_c_edge(e)) {
            throw Error(ErrorKind::NotInTunnel, "pair (face " + std::to_string(p.face) + ", edge " +
                                                    std::to_string(p.edge) + ") is not on the tunnel");
        }
    }
    const int d = std::abs(union_position(t, a.cycle.wrap(p1.edge)) - union_position(t, a.cycle.wrap(p2.edge)));
    const bool same_region = a.faces[p1.face].side == a.faces[p2.face].side;
    return same_region == (d % 4 == 0);
}

std::optional<TransferPairRecord> TransferPairOracle::query(FaceEdge p, const TunnelTrack& track) {
    p.edge = a_.cycle.wrap(p.edge);
    const auto key = std::make_tuple(p.face, p.edge, &track);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = std::nullopt;  // guards against re-entry
    if (track.cyclic) return std::nullopt;

    const Tunnel& tunnel = t_.tunnels[track.tunnel];
    const Arch* arch_b = nullptr;
    for (int id : track.arches) {
        const Arch& x = a_.arches[id];
        if (x.face == p.face && (x.start == p.edge || a_.cycle.wrap(x.start + 2) == p.edge)) arch_b = &x;
    }
    if (!arch_b) return std::nullopt;
    if (!on_track(a_, tunnel, p, track.exit)) return std::nullopt;

    const FaceId g = p.face;
    const int e = p.edge;
    const int b = arch_b->start == e ? a_.cycle.wrap(e + 2) : arch_b->start;
    const FaceId h = a_.opposite(g, b);
    const FaceEdge prev{h, b};
    std::vector<FaceEdge> chain{p};
    if (!(prev == track.exit)) {
        auto rec = query(prev, track);
        if (!rec) return std::nullopt;
        chain.insert(chain.end(), rec->chain.begin(), rec->chain.end());
    }

    if (a_.faces[g].thin) return std::nullopt;
    const FaceId f = a_.opposite(g, e);
    if (!a_.faces[f].minor || a_.faces[f].m < 3 || h == f) return std::nullopt;
    if (!a_.is_extremal_edge(g, e)) {
        if (!a_.is_extremal_edge(g, e - 1) && !a_.is_extremal_edge(g, e + 1)) return std::nullopt;
        const int mid = a_.cycle.wrap(arch_b->start + 1);
        bool ok = a_.faces[f].has_c_edge(mid);
        if (!ok) {
            const bool mid_major = !a_.faces[a_.edge_face(kMinus, mid)].minor ||
                                   !a_.faces[a_.edge_face(kPlus, mid)].minor;
            if (mid_major) {
                for (const Arch& other : a_.arches) {
                    if (other.m != 3 || other.id == arch_b->id) continue;
                    const int s0 = other.start, s2 = a_.cycle.wrap(other.start + 2);
                    if (s0 != e && s2 != e) continue;
                    if (strict_ && t_.tunnel_of_arch[other.id] != track.tunnel) continue;
                    const int y = s0 == e ? s2 : s0;
                    const bool y_major = !a_.faces[a_.edge_face(kMinus, y)].minor ||
                                         !a_.faces[a_.edge_face(kPlus, y)].minor;
                    if (!y_major) {
                        ok = true;
                        break;
                    }
                }
            }
        }
        if (!ok) return std::nullopt;
    }
    TransferPairRecord rec{p, &track, std::move(chain), arch_b->id};
    memo_[key] = rec;
    return rec;
}

std::optional<TransferPairRecord> TransferPairOracle::query_any(FaceEdge p) {
    for (const TunnelTrack* track : t_.tracks()) {
        if (track->cyclic) continue;
        bool relevant = false;
        for (int id : track->arches) {
            const Arch& x = a_.arches[id];
            relevant |= x.face == p.face &&
                        (x.start == a_.cycle.wrap(p.edge) || a_.cycle.wrap(x.start + 2) == a_.cycle.wrap(p.edge));
        }
        if (!relevant) continue;
        if (auto rec = query(p, *track)) return rec;
    }
    return std::nullopt;
}

std::vector<TransferPairRecord> TransferPairOracle::all(const TunnelTrack& track) {
    std::vector<TransferPairRecord> out;
    for (int id : track.arches) {
        const Arch& x = a_.arches[id];
        for (int e : {x.start, a_.cycle.wrap(x.start + 2)}) {
            if (auto rec = query({x.face, e}, track)) out.push_back(*rec);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const TransferPairRecord& x, const TransferPairRecord& y) { return x.chain.size() < y.chain.size(); });
    return out;
}

nlohmann::json tunnels_to_json(const CycleAnalysis& a, const TunnelSet& t, TransferPairOracle& oracle) {
    using nlohmann::json;
    json out = json::array();
    for (const Tunnel& tunnel : t.tunnels) {
        json jt;
        jt["id"] = tunnel.id;
        jt["arches"] = tunnel.arches;
        jt["cyclic"] = tunnel.cyclic;
        jt["edge_union"] = tunnel.edge_union;
        for (const TunnelTrack* track : {&tunnel.ccw, &tunnel.cw}) {
            json tr;
            tr["arches"] = track->arches;
            tr["exit"] = {{"face", track->exit.face}, {"edge", track->exit.edge}};
            json pairs = json::array();
            for (const auto& rec : oracle.all(*track)) {
                pairs.push_back({{"face", rec.pair.face}, {"edge", rec.pair.edge}, {"arch", rec.arch},
                                 {"chain_length", rec.chain.size()}});
            }
            tr["transfer_pairs"] = std::move(pairs);
            jt[track->direction == Direction::Counterclockwise ? "ccw" : "cw"] = std::move(tr);
        }
        out.push_back(std::move(jt));
    }
    (void)a;
    return out;
}

}  // namespace isocycle
