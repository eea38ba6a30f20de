#include "isocycle/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace isocycle {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Unbiased draw in [0, bound); mt19937_64's output is fixed by the standard,
// std::uniform_int_distribution's mapping is not.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <class T>
void shuffle_deterministic(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[draw_below(rng, i)]);
    }
}

struct Rotation {
    std::vector<std::vector<VertexId>> r;

    int pos(VertexId v, VertexId w) const {
        const auto& list = r[v];
        return static_cast<int>(std::find(list.begin(), list.end(), w) - list.begin());
    }
    VertexId succ(VertexId v, VertexId w) const {
        const auto& list = r[v];
        return list[(pos(v, w) + 1) % list.size()];
    }
    void insert_after(VertexId v, VertexId after, VertexId x) {
        auto& list = r[v];
        list.insert(list.begin() + pos(v, after) + 1, x);
    }
    void erase(VertexId v, VertexId w) {
        auto& list = r[v];
        list.erase(list.begin() + pos(v, w));
    }
    bool adjacent(VertexId v, VertexId w) const {
        return std::find(r[v].begin(), r[v].end(), w) != r[v].end();
    }
    // Places a new vertex into the face traversed a->b->c.
    VertexId stack_into(VertexId a, VertexId b, VertexId c) {
        const VertexId x = static_cast<VertexId>(r.size());
        insert_after(b, a, x);
        insert_after(c, b, x);
        insert_after(a, c, x);
        r.push_back({a, c, b});
        return x;
    }
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int v = 0; v < static_cast<int>(r.size()); ++v) {
            for (VertexId w : r[v]) {
                if (v < w) out.emplace_back(v, w);
            }
        }
        return out;
    }
};

std::vector<std::array<VertexId, 3>> triangle_faces(const PlaneGraph& g) {
    std::vector<std::array<VertexId, 3>> out;
    for (const Face& f : g.faces()) {
        if (f.size() != 3) throw Error(ErrorKind::ContractViolation, "base is not a triangulation");
        out.push_back({g.tail(f.darts[0]), g.tail(f.darts[1]), g.tail(f.darts[2])});
    }
    return out;
}

Rotation double_wheel(int n) {
    // pole 0 inside a counterclockwise rim 2..n-1, pole 1 in the outer face
    const int rim = n - 2;
    std::vector<std::pair<double, double>> xy(n, {0.0, 0.0});
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < rim; ++i) {
        const double t = 2 * kPi * i / rim;
        xy[2 + i] = {std::cos(t), std::sin(t)};
        edges.emplace_back(0, 2 + i);
        edges.emplace_back(2 + i, 2 + (i + 1) % rim);
    }
    Rotation rot;
    rot.r = rotation_from_coordinates(xy, edges);
    for (int i = 0; i < rim; ++i) {
        rot.insert_after(2 + i, 2 + (i + 1) % rim, 1);
        rot.r[1].push_back(2 + i);
    }
    return rot;
}

PlaneGraph finish(Rotation rot) { return PlaneGraph::from_rotation(std::move(rot.r)); }

}  // namespace

std::vector<std::vector<VertexId>> rotation_from_coordinates(
    const std::vector<std::pair<double, double>>& coords,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
    const int n = static_cast<int>(coords.size());
    std::vector<std::vector<VertexId>> rot(n);
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto angle = [&](VertexId w) {
            return std::atan2(coords[w].second - coords[v].second, coords[w].first - coords[v].first);
        };
        std::sort(rot[v].begin(), rot[v].end(),
                  [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
    }
    return rot;
}

PlaneGraph relabel(const PlaneGraph& g, const std::vector<VertexId>& perm) {
    const int n = g.vertex_count();
    std::vector<std::string> names(n);
    std::vector<std::vector<VertexId>> rot(n);
    for (int v = 0; v < n; ++v) {
        names[perm[v]] = g.name(v);
        for (VertexId w : g.rotation(v)) rot[perm[v]].push_back(perm[w]);
    }
    return PlaneGraph::build(std::move(names), std::move(rot));
}

PlaneGraph named_graph(const std::string& raw) {
    std::string name = raw;
    int param = -1;
    if (auto open = name.find('('); open != std::string::npos) {
        auto close = name.find(')', open);
        if (close == std::string::npos) throw Error(ErrorKind::UnknownName, raw);
        try {
            param = std::stoi(name.substr(open + 1, close - open - 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::UnknownName, raw);
        }
        name = name.substr(0, open);
    }
    std::transform(name.begin(), name.end(), name.begin(), ::tolower);

    if (name == "k4") {
        std::vector<std::pair<double, double>> xy{{0, 0}, {4, 0}, {2, 3.5}, {2, 1.2}};
        std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
        return PlaneGraph::build({"a", "b", "c", "d"}, rotation_from_coordinates(xy, e));
    }
    if (name == "octahedron") {
        // a-b-c-d is an equator; e and f are the apexes
        std::vector<std::pair<double, double>> xy{
            {0, 10}, {-8.66, -5}, {8.66, -5}, {0, -2}, {1.73, 1}, {-1.73, 1}};
        std::vector<std::pair<VertexId, VertexId>> e;
        for (int u = 0; u < 6; ++u) {
            for (int v = u + 1; v < 6; ++v) {
                if (v - u != 3) e.emplace_back(u, v);
            }
        }
        return PlaneGraph::build({"e", "a", "b", "f", "c", "d"}, rotation_from_coordinates(xy, e));
    }
    if (name == "cube") {
        std::vector<std::pair<double, double>> xy{{0, 0}, {4, 0}, {4, 4}, {0, 4},
                                                  {1, 1}, {3, 1}, {3, 3}, {1, 3}};
        std::vector<std::pair<VertexId, VertexId>> e;
        for (int i = 0; i < 4; ++i) {
            e.emplace_back(i, (i + 1) % 4);
            e.emplace_back(4 + i, 4 + (i + 1) % 4);
            e.emplace_back(i, i + 4);
        }
        return PlaneGraph::from_rotation(rotation_from_coordinates(xy, e));
    }
    if (name == "wheel" || name == "prism") {
        const int k = param < 0 ? (name == "wheel" ? 5 : 3) : param;
        if (k < 3) throw Error(ErrorKind::UnknownName, raw + " needs k >= 3");
        std::vector<std::pair<double, double>> xy;
        std::vector<std::pair<VertexId, VertexId>> e;
        if (name == "wheel") {
            xy.emplace_back(0, 0);
            for (int i = 0; i < k; ++i) {
                const double t = 2 * kPi * i / k;
                xy.emplace_back(std::cos(t), std::sin(t));
                e.emplace_back(0, 1 + i);
                e.emplace_back(1 + i, 1 + (i + 1) % k);
            }
        } else {
            for (int ring = 0; ring < 2; ++ring) {
                for (int i = 0; i < k; ++i) {
                    const double t = 2 * kPi * i / k;
                    const double rad = ring == 0 ? 2.0 : 1.0;
                    xy.emplace_back(rad * std::cos(t), rad * std::sin(t));
                }
            }
            for (int i = 0; i < k; ++i) {
                e.emplace_back(i, (i + 1) % k);
                e.emplace_back(k + i, k + (i + 1) % k);
                e.emplace_back(i, k + i);
            }
        }
        return PlaneGraph::from_rotation(rotation_from_coordinates(xy, e));
    }
    throw Error(ErrorKind::UnknownName, raw);
}

PlaneGraph gen_insertion_family(const PlaneGraph& base, std::uint64_t seed) {
    if (!is_four_connected(base)) {
        throw Error(ErrorKind::BaseNotFourConnected, "insertion base must be 4-connected");
    }
    const auto faces = triangle_faces(base);
    Rotation rot;
    rot.r = base.rotations();
    std::vector<std::string> names = base.names();
    int k = 0;
    for (const auto& f : faces) {
        rot.stack_into(f[0], f[1], f[2]);
        names.push_back("i" + std::to_string(k++));
    }
    PlaneGraph g = PlaneGraph::build(std::move(names), std::move(rot.r));
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::vector<VertexId> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        shuffle_deterministic(perm, rng);
        g = relabel(g, perm);
    }
    return g;
}

PlaneGraph gen_random_triangulation(int n, std::uint64_t seed, bool require_four_connected) {
    if (n < 4) throw Error(ErrorKind::SizeTooSmall, "triangulations need n >= 4");
    std::mt19937_64 rng(seed);
    if (!require_four_connected) {
        Rotation rot;
        rot.r = named_graph("K4").rotations();
        auto faces = triangle_faces(PlaneGraph::from_rotation(rot.r));
        while (static_cast<int>(rot.r.size()) < n) {
            const std::size_t pick = draw_below(rng, faces.size());
            const auto [a, b, c] = faces[pick];
            const VertexId x = rot.stack_into(a, b, c);
            faces[pick] = {a, b, x};
            faces.push_back({b, c, x});
            faces.push_back({c, a, x});
        }
        return finish(std::move(rot));
    }
    if (n < 6) throw Error(ErrorKind::SizeTooSmall, "4-connected triangulations need n >= 6");
    Rotation rot = double_wheel(n);
    const int attempts = 20 * n;
    for (int t = 0; t < attempts; ++t) {
        const auto edges = rot.edges();
        const Edge e = edges[draw_below(rng, edges.size())];
        const VertexId a = e.u, b = e.v;
        const VertexId c = rot.succ(b, a);
        const VertexId d = rot.succ(a, b);
        if (c == d || rot.adjacent(c, d)) continue;
        bool separating = false;
        for (VertexId x : rot.r[c]) {
            if (x != a && x != b && rot.adjacent(d, x)) {
                separating = true;
                break;
            }
        }
        if (separating) continue;
        rot.erase(a, b);
        rot.erase(b, a);
        rot.insert_after(c, b, d);
        rot.insert_after(d, a, c);
    }
    return finish(std::move(rot));
}

PlaneGraph gen_random_e4c(int n, std::uint64_t seed, int sparsify) {
    if (n < 6) throw Error(ErrorKind::SizeTooSmall, "random-e4c needs n >= 6");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const int min_base = std::max(6, (n + 4 + 2) / 3);
    const int base_n = min_base + static_cast<int>(draw_below(rng, n - min_base + 1));
    PlaneGraph base = gen_random_triangulation(base_n, rng(), true);
    auto faces = triangle_faces(base);
    shuffle_deterministic(faces, rng);
    Rotation rot;
    rot.r = base.rotations();
    for (int i = 0; i < n - base_n; ++i) rot.stack_into(faces[i][0], faces[i][1], faces[i][2]);
    PlaneGraph g = finish(std::move(rot));

    for (int t = 0; t < sparsify; ++t) {
        const auto edges = g.edges();
        const Edge e = edges[draw_below(rng, edges.size())];
        if (g.degree(e.u) <= 3 || g.degree(e.v) <= 3) continue;
        PlaneGraph h = g.without_edges({e});
        h = PlaneGraph::from_rotation(h.rotations());
        if (is_essentially_four_connected(h)) g = std::move(h);
    }
    return g;
}

PlaneGraph realize(const InstanceRecipe& r) {
    if (r.family == "named") return named_graph(r.name);
    if (r.family == "insertion") {
        const bool random_base = r.name.empty() || r.name == "random";
        // n is the final size: a base on b vertices yields 3b - 4
        if (random_base && (r.n + 4) % 3 != 0) {
            throw Error(ErrorKind::ParseError, "insertion family sizes satisfy n = 2 (mod 3)");
        }
        if (random_base && (r.n + 4) / 3 < 6) throw Error(ErrorKind::SizeTooSmall, "insertion family needs n >= 14");
        PlaneGraph base = random_base ? gen_random_triangulation((r.n + 4) / 3, r.seed, true) : named_graph(r.name);
        return gen_insertion_family(base, r.name == "random" ? 0 : r.seed);
    }
    if (r.family == "random-triangulation") {
        return gen_random_triangulation(r.n, r.seed, r.four_connected);
    }
    if (r.family == "random-e4c") return gen_random_e4c(r.n, r.seed, r.sparsify);
    throw Error(ErrorKind::UnknownName, "unknown family " + r.family);
}

nlohmann::json InstanceRecipe::to_json() const {
    return {{"family", family}, {"name", name},       {"n", n},
            {"seed", seed},     {"four_connected", four_connected}, {"sparsify", sparsify}};
}

InstanceRecipe InstanceRecipe::from_json(const nlohmann::json& doc) {
    InstanceRecipe r;
    r.family = doc.value("family", std::string{});
    r.name = doc.value("name", std::string{});
    r.n = doc.value("n", 0);
    r.seed = doc.value("seed", std::uint64_t{0});
    r.four_connected = doc.value("four_connected", false);
    r.sparsify = doc.value("sparsify", 0);
    return r;
}

std::string InstanceRecipe::label() const {
    std::string out = family;
    if (!name.empty()) out += ":" + name;
    if (n > 0) out += ":n=" + std::to_string(n);
    out += ":seed=" + std::to_string(seed);
    if (four_connected) out += ":4c";
    if (sparsify > 0) out += ":sparsify=" + std::to_string(sparsify);
    return out;
}

}  // namespace isocycle
