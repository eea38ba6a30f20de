#include "doctest.h"

#include "isocycle/cycle_analysis.hpp"
#include "isocycle/discharging.hpp"
#include "isocycle/error.hpp"
#include "isocycle/generators.hpp"
#include "isocycle/graph_io.hpp"
#include "isocycle/oracle.hpp"
#include "isocycle/tunnels.hpp"

#include "../corpus.hpp"
#include "../fixtures.hpp"

using namespace isocycle;

TEST_SUITE("discharging_audit") {

TEST_CASE("cube 6-cycle conserves weight") {
    const PlaneGraph g = named_graph("cube");
    const CycleAnalysis a = analyze_cycle(g, {0, 1, 5, 6, 7, 3});
    const TunnelSet ts = build_tunnels(a);
    const WeightLedger l = apply_discharging(a, ts);
    CHECK(l.total() == 12);
    int initial = 0;
    for (int w : l.initial) initial += w;
    CHECK(initial == 12);
    CHECK(check_exclusivity(l).per_face);
    CHECK(check_invariants(a, ts, l).conservation);
}

TEST_CASE("cube inequality counts") {
    const PlaneGraph g = named_graph("cube");
    const CycleAnalysis a = analyze_cycle(g, {0, 1, 5, 6, 7, 3});
    const TunnelSet ts = build_tunnels(a);
    const InequalityReport r = check_inequalities(apply_discharging(a, ts), a);
    CHECK(r.m_minus == 3);
    CHECK(r.m_plus == 3);
    CHECK(r.applicable1);
    CHECK_FALSE(r.ineq1);  // 12 < 24
    CHECK_FALSE(r.ineq2);  // 12 < 18
}

TEST_CASE("hand-built instances conserve weight") {
    const PlaneGraph track = fixtures::track_instance();
    const CycleAnalysis a = analyze_cycle(track, fixtures::first_cycle(fixtures::kTrackCycle));
    const TunnelSet ts = build_tunnels(a);
    CHECK(apply_discharging(a, ts).total() == 40);

    const PlaneGraph cyc = fixtures::cyclic_tunnel_instance();
    const CycleAnalysis b = analyze_cycle(cyc, fixtures::first_cycle(12));
    const TunnelSet tb = build_tunnels(b);
    const WeightLedger lb = apply_discharging(b, tb);
    CHECK(lb.total() == 24);
    CHECK(check_invariants(b, tb, lb).all());
}

TEST_CASE("preconditions") {
    const PlaneGraph g = named_graph("octahedron");
    const CycleAnalysis a = analyze_cycle(g, parse_vertex_list(g, "a,b,c,d"));
    const TunnelSet ts = build_tunnels(a);
    try {
        apply_discharging(a, ts);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CycleTooShort);
    }

    const PlaneGraph h = gen_insertion_family(named_graph("octahedron"));
    int checked = 0;
    for (const auto& c : oracle_isolating_cycles(h, 8, 20)) {
        const CycleAnalysis b = analyze_cycle(h, c);
        if (!b.has_minor_one_face()) continue;
        CHECK_THROWS_AS(apply_discharging(b, build_tunnels(b)), Error);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("exclusivity on synthetic ledgers") {
    WeightLedger empty;
    empty.c = 6;
    CHECK(check_exclusivity(empty).ok);

    WeightLedger twice;
    twice.c = 6;
    twice.pulls.push_back({0, 1, 2, Condition::C4, false, {}});
    twice.pulls.push_back({0, 1, 2, Condition::C7, false, {}});
    const auto r = check_exclusivity(twice);
    CHECK_FALSE(r.per_face);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violations.empty());

    WeightLedger both;
    both.c = 6;
    both.pulls.push_back({0, 1, 2, Condition::C2, false, {}});
    both.pulls.push_back({1, 0, 2, Condition::C6, false, {}});
    const auto s = check_exclusivity(both);
    CHECK(s.per_face);
    CHECK_FALSE(s.opposite);
}

TEST_CASE("ledgers are deterministic and conservative on sweep cycles") {
    int audited = 0;
    for (const auto& r : corpus::sweep_recipes(9)) {
        const PlaneGraph g = realize(r);
        for (const auto& c : corpus::audit_cycles(g)) {
            const CycleAnalysis a = analyze_cycle(g, c);
            const TunnelSet ts = build_tunnels(a);
            const WeightLedger l1 = apply_discharging(a, ts);
            const WeightLedger l2 = apply_discharging(a, ts);
            CHECK(l1 == l2);
            CHECK(l1.total() == 2 * a.c());
            for (const PullRecord& p : l1.pulls) {
                CHECK(a.faces[p.puller].has_c_edge(p.edge));
                CHECK(a.opposite(p.puller, p.edge) == p.source);
            }
            ++audited;
        }
    }
    CHECK(audited > 0);
}

TEST_CASE("conditions are evaluated clause by clause") {
    const PlaneGraph g = named_graph("cube");
    const CycleAnalysis a = analyze_cycle(g, {0, 1, 5, 6, 7, 3});
    const TunnelSet ts = build_tunnels(a);
    ConditionEvaluator ev(a, ts);
    const WeightLedger l = apply_discharging(a, ts);
    for (const PullRecord& p : l.pulls) CHECK(ev.evaluate(p.condition, p.puller, p.edge));
}

TEST_CASE("ledger JSON") {
    const PlaneGraph g = named_graph("cube");
    const CycleAnalysis a = analyze_cycle(g, {0, 1, 5, 6, 7, 3});
    const auto doc = ledger_to_json(a, apply_discharging(a, build_tunnels(a)));
    CHECK(doc.contains("pulls"));
}

}
