#pragma once

// Hand-built instances: a cycle v0..v(c-1) with apexes and chords on either
// side. Each side is drawn straight-line inside a disk; the outer side is
// then mapped outside (circle inversion), which reverses its orientation.

#include <cmath>
#include <string>
#include <vector>

#include "isocycle/generators.hpp"
#include "isocycle/plane_graph.hpp"

namespace fixtures {

using isocycle::PlaneGraph;
using isocycle::VertexId;

struct Apex {
    std::string name;
    std::vector<int> points;  // cycle neighbours in forward order
    double radius = 0.6;      // drawn at the middle of the first span
};

struct SideSpec {
    std::vector<Apex> apexes;
    std::vector<std::pair<int, int>> chords;
};

inline int span(int c, const Apex& a) { return ((a.points[1] - a.points[0]) % c + c) % c; }

inline std::vector<std::vector<VertexId>> side_rotation(int c, int total, int first_apex, const SideSpec& side) {
    const double pi = std::acos(-1.0);
    std::vector<std::pair<double, double>> xy(total, {0.0, 0.0});
    auto angle = [&](double i) { return -2.0 * pi * i / c; };
    for (int i = 0; i < c; ++i) xy[i] = {std::cos(angle(i)), std::sin(angle(i))};
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < c; ++i) edges.emplace_back(i, (i + 1) % c);
    for (std::size_t k = 0; k < side.apexes.size(); ++k) {
        const auto& a = side.apexes[k];
        const VertexId id = first_apex + static_cast<int>(k);
        const double mid = a.points[0] + span(c, a) / 2.0;
        xy[id] = {a.radius * std::cos(angle(mid)), a.radius * std::sin(angle(mid))};
        for (int p : a.points) edges.emplace_back(id, p);
    }
    for (auto [u, w] : side.chords) edges.emplace_back(u, w);
    return isocycle::rotation_from_coordinates(xy, edges);
}

// Entries of the cyclic list strictly between a and b, ordered from a's side.
inline std::vector<VertexId> items_from(const std::vector<VertexId>& rot, VertexId a, VertexId b) {
    const int d = static_cast<int>(rot.size());
    int ia = -1;
    for (int i = 0; i < d; ++i) {
        if (rot[i] == a) ia = i;
    }
    std::vector<VertexId> fwd;
    std::vector<VertexId> bwd;
    for (int k = 1; k < d; ++k) {
        const VertexId x = rot[(ia + k) % d];
        if (x == b) break;
        fwd.push_back(x);
    }
    for (int k = 1; k < d; ++k) {
        const VertexId x = rot[((ia - k) % d + d) % d];
        if (x == b) break;
        bwd.push_back(x);
    }
    return fwd.empty() ? bwd : fwd;
}

inline PlaneGraph cycle_with_sides(int c, const SideSpec& inner, const SideSpec& outer) {
    const int ni = static_cast<int>(inner.apexes.size());
    const int total = c + ni + static_cast<int>(outer.apexes.size());
    const auto din = side_rotation(c, total, c, inner);
    const auto dout = side_rotation(c, total, c + ni, outer);
    std::vector<std::string> names;
    for (int i = 0; i < c; ++i) names.push_back("v" + std::to_string(i));
    for (const auto& a : inner.apexes) names.push_back(a.name);
    for (const auto& a : outer.apexes) names.push_back(a.name);

    // is the inner side clockwise-after the predecessor?
    bool inner_after_p = true;
    for (int i = 0; i < c; ++i) {
        const VertexId p = (i + c - 1) % c;
        const VertexId s = (i + 1) % c;
        if (din[i].size() <= 2) continue;
        const auto& rot = din[i];
        const int d = static_cast<int>(rot.size());
        int ip = 0;
        while (rot[ip] != p) ++ip;
        inner_after_p = rot[(ip + 1) % d] != s;
        break;
    }
    std::vector<std::vector<VertexId>> rotation(total);
    for (int i = 0; i < c; ++i) {
        const VertexId p = (i + c - 1) % c;
        const VertexId s = (i + 1) % c;
        const VertexId a = inner_after_p ? p : s;
        const VertexId b = inner_after_p ? s : p;
        auto& r = rotation[i];
        r.push_back(a);
        for (VertexId x : items_from(din[i], a, b)) r.push_back(x);
        r.push_back(b);
        for (VertexId x : items_from(dout[i], b, a)) r.push_back(x);
    }
    for (int k = 0; k < ni; ++k) rotation[c + k] = din[c + k];
    for (int k = c + ni; k < total; ++k) rotation[k] = {dout[k].rbegin(), dout[k].rend()};
    return PlaneGraph::build(names, rotation);
}

inline std::vector<VertexId> first_cycle(int c) {
    std::vector<VertexId> v(c);
    for (int i = 0; i < c; ++i) v[i] = i;
    return v;
}

// Alternating 3-arches T1..T5 (a1, b2, a3, the chord v4v7 and a5) around a
// 20-cycle, starting at v18. The counterclockwise exit face is the 2-face of
// b0 on v17..v19. Every apex has a third neighbour so the graph is
// 3-connected without minor 1-faces.
inline PlaneGraph track_instance() {
    SideSpec inner;
    inner.apexes = {{"a1", {18, 1, 13}}, {"a3", {2, 5, 13}}, {"a5", {6, 9, 11}}, {"y", {13, 16, 18}}};
    SideSpec outer;
    outer.apexes = {{"b0", {17, 19, 15}}, {"b2", {0, 3, 14}}, {"b4", {4, 10, 12}}};
    outer.chords = {{4, 7}, {8, 10}};
    return cycle_with_sides(20, inner, outer);
}

constexpr int kTrackCycle = 20;

// One hub apex per side with three 4-faces, each holding a chord 3-arch;
// the six chords form a single cyclic tunnel around a 12-cycle.
inline PlaneGraph cyclic_tunnel_instance() {
    SideSpec inner;
    inner.apexes = {{"p", {0, 4, 8}, 0.0}};
    inner.chords = {{0, 3}, {4, 7}, {8, 11}};
    SideSpec outer;
    outer.apexes = {{"q", {2, 6, 10}, 0.0}};
    outer.chords = {{2, 5}, {6, 9}, {10, 1}};
    return cycle_with_sides(12, inner, outer);
}

}  // namespace fixtures
