#include "doctest.h"

#include "isocycle/error.hpp"
#include "isocycle/generators.hpp"
#include "isocycle/graph_io.hpp"
#include "isocycle/plane_graph.hpp"

using namespace isocycle;

namespace {

ErrorKind build_error(std::vector<std::vector<VertexId>> rot) {
    try {
        PlaneGraph::from_rotation(std::move(rot));
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("build accepted a bad rotation");
    return ErrorKind::ContractViolation;
}

// Octahedron with two vertices stacked in one inner triangle: {3,4,5}
// separates {6,7} from the outer triangle.
PlaneGraph nested_triangles() {
    std::vector<std::pair<double, double>> xy{{0, 10},  {-10, -8}, {10, -8}, {0, 2},
                                              {-2, -1.5}, {2, -1.5}, {0, -0.33}, {-0.67, 0.06}};
    std::vector<std::pair<VertexId, VertexId>> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                                 {0, 3}, {1, 4}, {2, 5}, {0, 4}, {1, 5}, {2, 3},
                                                 {6, 3}, {6, 4}, {6, 5}, {7, 3}, {7, 4}, {7, 6}};
    return PlaneGraph::from_rotation(rotation_from_coordinates(xy, e));
}

}  // namespace

TEST_SUITE("plane_graph") {

TEST_CASE("face counts of small named graphs") {
    CHECK(named_graph("K4").face_count() == 4);
    CHECK(named_graph("octahedron").face_count() == 8);
    CHECK(named_graph("cube").face_count() == 6);
    CHECK(count_faces_of_size(named_graph("cube"), 4) == 6);
    CHECK(count_faces_of_size(named_graph("octahedron"), 3) == 8);
    const PlaneGraph w = named_graph("wheel(5)");
    CHECK(count_faces_of_size(w, 3) == 5);
    CHECK(count_faces_of_size(w, 5) == 1);
}

TEST_CASE("Euler formula holds on generated graphs") {
    for (std::uint64_t s = 1; s <= 5; ++s) {
        const PlaneGraph g = gen_random_e4c(18, s, 10);
        CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
    }
}

TEST_CASE("darts and faces are consistent") {
    const PlaneGraph g = named_graph("cube");
    for (DartId d = 0; d < g.dart_count(); ++d) {
        CHECK(g.twin(g.twin(d)) == d);
        CHECK(g.head(d) == g.tail(g.next_in_face(d)));
    }
}

TEST_CASE("connectivity classes") {
    const PlaneGraph path = PlaneGraph::from_rotation({{1}, {0, 2}, {1}});
    CHECK_FALSE(is_three_connected(path));
    CHECK(is_three_connected(named_graph("cube")));
    CHECK_FALSE(is_four_connected(named_graph("cube")));
    CHECK(is_four_connected(named_graph("octahedron")));
    CHECK(is_essentially_four_connected(named_graph("octahedron")));
    CHECK(is_essentially_four_connected(named_graph("wheel(5)")));
    CHECK_FALSE(is_four_connected(named_graph("wheel(5)")));
    CHECK(is_bipartite(named_graph("cube")));
    CHECK_FALSE(is_bipartite(named_graph("K4")));
}

TEST_CASE("a separating triangle with two vertices inside is not essentially 4-connected") {
    const PlaneGraph g = nested_triangles();
    REQUIRE(g.face_count() == 12);
    CHECK(is_three_connected(g));
    CHECK_FALSE(is_essentially_four_connected(g));
    const auto seps = three_separators(g);
    CHECK(std::find(seps.begin(), seps.end(), std::vector<VertexId>{3, 4, 5}) != seps.end());
}

TEST_CASE("JSON round trip keeps the checksum") {
    for (const char* name : {"K4", "octahedron", "cube", "prism(5)"}) {
        const PlaneGraph g = named_graph(name);
        const PlaneGraph h = graph_from_json(graph_to_json(g));
        CHECK(h == g);
        CHECK(h.checksum() == g.checksum());
    }
    const PlaneGraph r = gen_random_e4c(20, 7, 6);
    CHECK(graph_from_json(graph_to_json(r)).checksum() == r.checksum());
}

TEST_CASE("invalid rotation systems are rejected") {
    CHECK(build_error({{1, 2}, {0, 2}, {0}}) == ErrorKind::InconsistentRotation);
    CHECK(build_error({{1, 1}, {0, 0}}) == ErrorKind::NotSimple);
    CHECK(build_error({{1}, {0}, {3}, {2}}) == ErrorKind::Disconnected);
    // K4 with one rotation reversed traces too few faces
    std::vector<std::vector<VertexId>> k4 = named_graph("K4").rotations();
    std::swap(k4[3][0], k4[3][1]);
    CHECK(build_error(k4) == ErrorKind::NonPlanarEmbedding);
}

TEST_CASE("malformed JSON is a parse error") {
    nlohmann::json doc = {{"vertices", {"a", "b"}}, {"rotation", {{"a", {"zz"}}}}};
    try {
        graph_from_json(doc);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("parse_vertex_list resolves names") {
    const PlaneGraph g = named_graph("octahedron");
    const auto v = parse_vertex_list(g, "a,b,c,d");
    REQUIRE(v.size() == 4);
    CHECK(g.name(v[0]) == "a");
    CHECK(g.name(v[3]) == "d");
    CHECK_THROWS_AS(parse_vertex_list(g, "a,q"), Error);
}

}
