#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "isk4/harness.hpp"
#include "isk4/rng.hpp"
#include "isk4/sparse_cycles.hpp"

using namespace isk4;

TEST_CASE("apex over a star: everything in the neighborhood") {
    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    SparseCycleOutcome o = apex_forest_cycle(star, 0);
    CHECK(o.kind == SparseCycleOutcome::Kind::all_neighborhood);
    CHECK(check_apex_forest_outcome(star, 0, o));
}

TEST_CASE("apex on a C4: cycle with three degree-two vertices") {
    Graph c4 = fixtures::cycle(4);
    SparseCycleOutcome o = apex_forest_cycle(c4, 0);
    REQUIRE(o.kind == SparseCycleOutcome::Kind::cycle_through_xy);
    CHECK(!o.exceptional);
    CHECK(check_apex_forest_outcome(c4, 0, o));
}

TEST_CASE("apex adjacent to one end of a P3: far vertex of low degree") {
    Graph g = build_graph(4, {{1, 2}, {2, 3}, {0, 1}});  // x=0 sees one end
    SparseCycleOutcome o = apex_forest_cycle(g, 0);
    REQUIRE(o.kind == SparseCycleOutcome::Kind::low_degree_far_vertex);
    CHECK(o.vertex == 3);
    CHECK(check_apex_forest_outcome(g, 0, o));
}

TEST_CASE("apex_forest_cycle validates its precondition") {
    CHECK_THROWS_AS(apex_forest_cycle(fixtures::c8_wheel(), 0), std::invalid_argument);
}

TEST_CASE("far cycle: C4 hanging off x") {
    // C4 on 1..4 plus x=0 adjacent to 1
    Graph g = build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}});
    SparseCycleOutcome o = far_cycle_sp(g, 0, 0);
    REQUIRE(o.kind == SparseCycleOutcome::Kind::cycle_with_apex);
    CHECK(o.cycle.size() == 4);
    CHECK(check_far_cycle_outcome(g, 0, 0, o));
}

TEST_CASE("far cycle: x adjacent to two adjacent cycle vertices") {
    Graph g = build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}});
    SparseCycleOutcome o = far_cycle_sp(g, 0, 0);
    REQUIRE(o.kind == SparseCycleOutcome::Kind::cycle_with_apex);
    CHECK(check_far_cycle_outcome(g, 0, 0, o));
}

TEST_CASE("far cycle accepts either certificate when a pendant path exists") {
    // C4 on 1..4, x=0 adjacent to 1, long pendant path off 3
    Graph g = build_graph(8,
                          {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {3, 5}, {5, 6}, {6, 7}});
    SparseCycleOutcome o = far_cycle_sp(g, 0, 0);
    CHECK(check_far_cycle_outcome(g, 0, 0, o));
}

TEST_CASE("far_cycle_sp validates preconditions") {
    CHECK_THROWS_AS(far_cycle_sp(fixtures::petersen(), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(far_cycle_sp(fixtures::path(5), 0, 0), std::invalid_argument);  // no cycle
    CHECK_THROWS_AS(far_cycle_sp(fixtures::cycle(6), 0, 2), std::invalid_argument);  // xy not edge
}

TEST_CASE("sparse cycle outcomes on named graphs") {
    SparseCycleResult c5 = sparse_cycle(fixtures::cycle(5), 0, 0);
    REQUIRE(c5.outcome);
    CHECK(c5.outcome->kind == SparseCycleOutcome::Kind::cycle_through_xy);
    CHECK(!c5.outcome->exceptional);
    CHECK(check_sparse_cycle_outcome(fixtures::cycle(5), 0, 0, *c5.outcome));

    Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    SparseCycleResult s = sparse_cycle(star, 0, 0);
    REQUIRE(s.outcome);
    CHECK(s.outcome->kind == SparseCycleOutcome::Kind::all_neighborhood);

    Graph wheel = fixtures::c8_wheel();
    SparseCycleResult w = sparse_cycle(wheel, 8, 8);
    REQUIRE(w.outcome);
    CHECK(w.outcome->kind == SparseCycleOutcome::Kind::cycle_through_xy);
    CHECK(w.outcome->cycle.size() == 4);
    CHECK(check_sparse_cycle_outcome(wheel, 8, 8, *w.outcome));
}

TEST_CASE("sparse cycle with an edge pair") {
    Graph c6 = fixtures::cycle(6);
    SparseCycleResult r = sparse_cycle(c6, 0, 1);
    REQUIRE(r.outcome);
    CHECK(check_sparse_cycle_outcome(c6, 0, 1, *r.outcome));
    CHECK_THROWS_AS(sparse_cycle(c6, 0, 3), std::invalid_argument);
}

TEST_CASE("lemma existence sweeps on seeded instances") {
    // forests plus an apex
    int apex_instances = 0;
    for (int i = 0; i < 1000; ++i) {
        SplitMix64 rng(40'000 + i);
        const int n = 3 + static_cast<int>(rng.next_below(8));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            if (!rng.bernoulli(0.25))  // otherwise a new root: build a forest
                edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
        // apex adjacent to a random subset
        for (int v = 0; v < n; ++v)
            if (rng.bernoulli(0.5)) edges.emplace_back(v, n);
        Graph g = build_graph(n + 1, edges);
        SparseCycleOutcome o = apex_forest_cycle(g, n);
        CHECK(check_apex_forest_outcome(g, n, o));
        ++apex_instances;
    }
    CHECK(apex_instances == 1000);

    // series-parallel graphs whose non-apex part keeps a cycle
    int sp_instances = 0;
    for (int i = 0; sp_instances < 1000 && i < 20000; ++i) {
        Graph g = gen_series_parallel(6 + i % 20, 50'000 + static_cast<unsigned>(i));
        // pick x deterministically; skip instances violating the hypothesis
        int x = i % g.n;
        VertexSet keep = complement_set(g.n, {x});
        Graph rest = induced_subgraph(g, keep);
        if (static_cast<long long>(rest.edge_count()) ==
            rest.n - static_cast<long long>(components(rest).size()))
            continue;  // forest, hypothesis fails
        SparseCycleOutcome o = far_cycle_sp(g, x, x);
        CHECK(check_far_cycle_outcome(g, x, x, o));
        ++sp_instances;
    }
    CHECK(sp_instances == 1000);
}

TEST_CASE("minimal connected subgraph through three leaves: spider") {
    // paths of length 2 from center 0 to leaves 2, 4, 6
    Graph spider =
        build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    MinimalK13Result r = minimal_k13(spider, 2, 4, 6);
    CHECK(r.is_claw);
    CHECK(r.claw_center == 0);
    CHECK(r.subgraph == all_vertices(7));
}

TEST_CASE("minimal connected subgraph: triangle with pendants") {
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
    MinimalK13Result r = minimal_k13(g, 3, 4, 5);
    CHECK(!r.is_claw);
    CHECK(r.triangle == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("minimal connected subgraph: mid-path attachment") {
    // path 0-1-2-3-4 with 5 pendant on 2
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    MinimalK13Result r = minimal_k13(g, 0, 4, 5);
    CHECK(r.is_claw);
    CHECK(r.claw_center == 2);
}

TEST_CASE("minimal_k13 validates preconditions") {
    Graph g = fixtures::path(4);
    CHECK_THROWS_AS(minimal_k13(g, 0, 1, 3), std::invalid_argument);  // degree two leaf
    Graph disco = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(minimal_k13(disco, 0, 1, 2), std::invalid_argument);
}
