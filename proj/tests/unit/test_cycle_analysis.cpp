#include "doctest.h"

#include "isocycle/cycle_analysis.hpp"
#include "isocycle/error.hpp"
#include "isocycle/generators.hpp"
#include "isocycle/graph_io.hpp"
#include "isocycle/oracle.hpp"

#include "../corpus.hpp"
#include "../fixtures.hpp"

using namespace isocycle;

TEST_SUITE("cycle_analysis") {

TEST_CASE("octahedron equator") {
    const PlaneGraph g = named_graph("octahedron");
    const CycleAnalysis a = analyze_cycle(g, parse_vertex_list(g, "a,b,c,d"));
    REQUIRE(a.part.v_minus.size() == 1);
    REQUIRE(a.part.v_plus.size() == 1);
    CHECK(g.name(a.part.v_minus[0]) == "e");  // tie goes to the smaller id
    CHECK(g.name(a.part.v_plus[0]) == "f");
    CHECK(a.pruned.chords.empty());
    CHECK(a.minor_faces(kMinus).size() == 4);
    CHECK(a.minor_faces(kPlus).size() == 4);
    CHECK(a.has_minor_one_face());
    REQUIRE(a.t_minus.has_value());
    REQUIRE(a.t_plus.has_value());
    for (const auto* t : {&*a.t_minus, &*a.t_plus}) {
        CHECK(t->is_tree());
        CHECK(t->leaves().size() == 4);
    }
    CHECK(check_trees(a).ok);
}

TEST_CASE("wheel rim has an empty side") {
    const PlaneGraph g = named_graph("wheel(5)");
    const CycleAnalysis a = analyze_cycle(g, {1, 2, 3, 4, 5});
    CHECK(a.part.v_minus.empty());
    CHECK(a.part.v_plus == std::vector<VertexId>{0});
    CHECK(a.minor_faces(kPlus).size() == 5);
    CHECK(a.minor_faces(kMinus).empty());
    for (const FaceInfo& f : a.faces) {
        if (f.side == kMinus) CHECK(f.thin);
        if (f.side == kPlus) CHECK_FALSE(f.thin);
    }
}

TEST_CASE("K4 triangle") {
    const PlaneGraph g = named_graph("K4");
    const CycleAnalysis a = analyze_cycle(g, parse_vertex_list(g, "a,b,c"));
    CHECK(a.part.v_minus.empty());
    CHECK(a.part.v_plus.size() == 1);
    CHECK(a.minor_faces(kPlus).size() == 3);
    for (FaceId f : a.minor_faces(kPlus)) {
        CHECK(a.faces[f].m == 1);
        CHECK(a.faces[f].v_f == *g.find("d"));
    }
}

TEST_CASE("non-isolating and invalid cycles") {
    const PlaneGraph g = named_graph("cube");
    CHECK_FALSE(is_isolating(g, CycleOnGraph(g, {0, 1, 2, 3})));
    CHECK_THROWS_AS(analyze_cycle(g, {0, 1, 2, 3}), Error);
    CHECK_THROWS_AS(CycleOnGraph(g, {0, 1, 6}), Error);
    CHECK_THROWS_AS(CycleOnGraph(g, {0, 1}), Error);
    CHECK_THROWS_AS(CycleOnGraph(g, {0, 1, 2, 3, 0}), Error);
}

TEST_CASE("cube 6-cycle has thick minor 2-faces on both sides") {
    const PlaneGraph g = named_graph("cube");
    const CycleAnalysis a = analyze_cycle(g, {0, 1, 5, 6, 7, 3});
    CHECK(a.part.v_minus.size() == 1);
    CHECK(a.part.v_plus.size() == 1);
    CHECK_FALSE(a.has_minor_one_face());
    for (int side : {kMinus, kPlus}) {
        const auto minors = a.minor_faces(side);
        CHECK(minors.size() == 3);
        for (FaceId f : minors) {
            CHECK(a.faces[f].m == 2);
            CHECK_FALSE(a.faces[f].thin);
        }
    }
    CHECK(check_trees(a).ok);
}

TEST_CASE("Hamiltonian cycles have no trees") {
    const PlaneGraph g = named_graph("cube");
    const auto h = hamiltonian_cycle_on(g, {0, 1, 2, 3, 4, 5, 6, 7});
    REQUIRE(h.has_value());
    const CycleAnalysis a = analyze_cycle(g, *h);
    CHECK(a.hamiltonian());
    CHECK_FALSE(a.t_minus.has_value());
    CHECK_FALSE(a.t_plus.has_value());
    CHECK(a.pruned.deleted_chords.size() == a.pruned.chords.size());
}

TEST_CASE("chords are pruned when the minus side is nonempty") {
    const PlaneGraph g = fixtures::track_instance();
    const CycleAnalysis a = analyze_cycle(g, fixtures::first_cycle(fixtures::kTrackCycle));
    CHECK(a.pruned.chords.size() == 2);
    CHECK(a.pruned.deleted_chords.size() == 2);
    CHECK(a.pruned.h.edge_count() == g.edge_count() - 2);
}

TEST_CASE("every C-edge has one face per side") {
    const PlaneGraph g = fixtures::track_instance();
    const CycleAnalysis a = analyze_cycle(g, fixtures::first_cycle(fixtures::kTrackCycle));
    for (int e = 0; e < a.c(); ++e) {
        const FaceId lo = a.edge_face(kMinus, e);
        const FaceId hi = a.edge_face(kPlus, e);
        CHECK(lo != hi);
        CHECK(a.faces[lo].has_c_edge(e));
        CHECK(a.faces[hi].has_c_edge(e));
        CHECK(a.opposite(lo, e) == hi);
    }
}

TEST_CASE("trees on sweep instances") {
    for (const auto& r : corpus::sweep_recipes(12, 101)) {
        const PlaneGraph g = realize(r);
        for (const auto& c : corpus::start_cycles(g, 8)) {
            const CycleAnalysis a = analyze_cycle(g, c);
            const TreeCheck t = check_trees(a);
            CHECK_MESSAGE(t.ok, r.label());
            // leaf count identity for trees with at least two nodes
            for (const auto& tree : {a.t_minus, a.t_plus}) {
                REQUIRE(tree.has_value());
                const auto deg = tree->degrees();
                int expect = 2;
                for (int d : deg) expect += d >= 3 ? d - 2 : 0;
                if (deg.size() >= 2) CHECK(static_cast<int>(tree->leaves().size()) == expect);
            }
        }
    }
}

TEST_CASE("analysis JSON lists faces and arches") {
    const PlaneGraph g = named_graph("cube");
    const auto doc = analysis_to_json(analyze_cycle(g, {0, 1, 5, 6, 7, 3}));
    CHECK(doc.contains("faces"));
    CHECK(doc.contains("arches"));
}

}
