#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "isk4/graph_io.hpp"
#include "isk4/recognizers.hpp"
#include "isk4/rng.hpp"

using namespace isk4;

namespace {

// Independent subdivision-of-K4 test for a vertex subset, used as the
// oracle for the detector: degree profile, connectivity, then smoothing on
// an explicit matrix with parallel-edge detection.
bool oracle_is_isk4_subset(const Graph& g, const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    if (k < 4) return false;
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(subset[i], subset[j])) adj[i][j] = 1;

    std::vector<int> deg(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) deg[i] += adj[i][j];
    int three = 0;
    for (int i = 0; i < k; ++i) {
        if (deg[i] == 3) ++three;
        else if (deg[i] != 2) return false;
    }
    if (three != 4) return false;

    std::vector<int> seen{0};
    std::vector<char> mark(k, 0);
    mark[0] = 1;
    for (std::size_t t = 0; t < seen.size(); ++t)
        for (int j = 0; j < k; ++j)
            if (adj[seen[t]][j] && !mark[j]) {
                mark[j] = 1;
                seen.push_back(j);
            }
    if (static_cast<int>(seen.size()) != k) return false;

    std::vector<char> alive(k, 1);
    for (;;) {
        int v = -1;
        for (int i = 0; i < k; ++i)
            if (alive[i] && deg[i] == 2) v = i;
        if (v < 0) break;
        std::vector<int> nbrs;
        for (int j = 0; j < k; ++j)
            if (alive[j] && adj[v][j]) nbrs.push_back(j);
        int a = nbrs[0], b = nbrs[1];
        if (adj[a][b]) return false;  // smoothing would double an edge
        alive[v] = 0;
        adj[v][a] = adj[a][v] = adj[v][b] = adj[b][v] = 0;
        adj[a][b] = adj[b][a] = 1;
        deg[a] = deg[b] = 0;
        for (int j = 0; j < k; ++j) {
            if (alive[j]) {
                deg[a] += adj[a][j] && alive[j] ? 1 : 0;
                deg[b] += adj[b][j] && alive[j] ? 1 : 0;
            }
        }
    }
    std::vector<int> rest;
    for (int i = 0; i < k; ++i)
        if (alive[i]) rest.push_back(i);
    if (rest.size() != 4) return false;
    for (int i : rest)
        for (int j : rest)
            if (i != j && !adj[i][j]) return false;
    return true;
}

bool oracle_has_isk4(const Graph& g) {
    std::vector<int> subset;
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        subset.clear();
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) subset.push_back(v);
        if (oracle_is_isk4_subset(g, subset)) return true;
    }
    return false;
}

// C4 on 0..3 plus an apex adjacent to 0, 1, 2.
Graph fan_graph() {
    return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}});
}

}  // namespace

TEST_CASE("triangles: lexicographically least, or none") {
    auto t = find_triangle(fixtures::complete(3));
    REQUIRE(t);
    CHECK(t->v == std::array<int, 3>{0, 1, 2});
    CHECK(!find_triangle(fixtures::cycle(5)));
    CHECK(!find_triangle(fixtures::petersen()));
    auto k4 = find_triangle(fixtures::complete(4));
    REQUIRE(k4);
    CHECK(k4->v == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("K33 subgraph detection") {
    Graph k33 = fixtures::complete_bipartite(3, 3);
    auto w = find_k33_subgraph(k33);
    REQUIRE(w);
    CHECK(validate_k33_witness(k33, *w));
    CHECK(w->a == std::array<int, 3>{0, 1, 2});
    CHECK(w->b == std::array<int, 3>{3, 4, 5});
    CHECK(!find_k33_subgraph(fixtures::cycle(6)));

    // a pendant vertex does not disturb the witness
    auto edges = fixtures::complete_bipartite(3, 3).edges();
    edges.emplace_back(0, 6);
    Graph pend = build_graph(7, edges);
    auto w2 = find_k33_subgraph(pend);
    REQUIRE(w2);
    CHECK(w2->a == std::array<int, 3>{0, 1, 2});
    CHECK(w2->b == std::array<int, 3>{3, 4, 5});
}

TEST_CASE("K4 is its own subdivision") {
    Graph k4 = fixtures::complete(4);
    Isk4Result r = find_isk4_exact(k4);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(validate_isk4_witness(k4, *r.witness));
    CHECK(r.witness->vertex_set == VertexSet{0, 1, 2, 3});
    for (const Path& p : r.witness->paths) CHECK(p.size() == 2);
}

TEST_CASE("fan over C4: branch set is forced, one edge subdivided") {
    Graph g = fan_graph();
    Isk4Result r = find_isk4_exact(g);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(validate_isk4_witness(g, *r.witness));
    VertexSet branch(r.witness->branch.begin(), r.witness->branch.end());
    std::sort(branch.begin(), branch.end());
    CHECK(branch == VertexSet{0, 1, 2, 4});
    CHECK(oracle_is_isk4_subset(g, {0, 1, 2, 3, 4}));
    // search mode agrees and its witness validates
    Isk4Result s = find_isk4_search(g);
    REQUIRE(s.status == SearchStatus::found);
    CHECK(validate_isk4_witness(g, *s.witness));
}

TEST_CASE("the four-spoke C8 wheel is ISK4-free") {
    Graph g = fixtures::c8_wheel();
    CHECK(find_isk4_exact(g).status == SearchStatus::absent);
    CHECK(find_isk4_search(g).status == SearchStatus::absent);
    CHECK(!oracle_has_isk4(g));
}

TEST_CASE("Petersen contains an ISK4") {
    Graph g = fixtures::petersen();
    Isk4Result r = find_isk4_exact(g);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(validate_isk4_witness(g, *r.witness));
    CHECK(oracle_has_isk4(g));
}

TEST_CASE("search mode is budget-disciplined, never wrong") {
    Graph g = fixtures::petersen();
    Isk4Result r = find_isk4_search(g, 10);
    CHECK(r.status != SearchStatus::absent);  // found or inconclusive, never absent
}

TEST_CASE("exact, search and oracle agree on seeded random graphs") {
    for (int i = 0; i < 150; ++i) {
        SplitMix64 seed_mix(1000 + i);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 9; ++u)
            for (int v = u + 1; v < 9; ++v)
                if (seed_mix.bernoulli(0.3)) edges.emplace_back(u, v);
        Graph g = build_graph(9, edges);
        Isk4Result exact = find_isk4_exact(g);
        Isk4Result search = find_isk4_search(g);
        bool oracle = oracle_has_isk4(g);
        CHECK(exact.status == search.status);
        CHECK((exact.status == SearchStatus::found) == oracle);
        if (exact.witness) CHECK(validate_isk4_witness(g, *exact.witness));
        if (search.witness) CHECK(validate_isk4_witness(g, *search.witness));
    }
}

TEST_CASE("trees are series-parallel with a replayable reduction") {
    Graph tree = build_graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    SpResult r = is_series_parallel(tree);
    CHECK(r.series_parallel);
    CHECK(validate_sp_reduction(tree, r.reduction));
}

TEST_CASE("K4 is not series-parallel; the minor certificate validates") {
    Graph k4 = fixtures::complete(4);
    SpResult r = is_series_parallel(k4);
    CHECK(!r.series_parallel);
    REQUIRE(r.certificate);
    CHECK(validate_k4_minor(k4, *r.certificate));
    for (const auto& bs : r.certificate->branch_sets) CHECK(bs.size() == 1);
}

TEST_CASE("the C8 wheel has a K4 minor certificate") {
    Graph g = fixtures::c8_wheel();
    SpResult r = is_series_parallel(g);
    CHECK(!r.series_parallel);
    REQUIRE(r.certificate);
    CHECK(validate_k4_minor(g, *r.certificate));
}

TEST_CASE("cycles and theta graphs are series-parallel") {
    for (int n : {3, 4, 7}) {
        SpResult r = is_series_parallel(fixtures::cycle(n));
        CHECK(r.series_parallel);
        CHECK(validate_sp_reduction(fixtures::cycle(n), r.reduction));
    }
    // K4 minus an edge
    Graph theta = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(is_series_parallel(theta).series_parallel);
}

TEST_CASE("Petersen is not series-parallel") {
    Graph g = fixtures::petersen();
    SpResult r = is_series_parallel(g);
    CHECK(!r.series_parallel);
    REQUIRE(r.certificate);
    CHECK(validate_k4_minor(g, *r.certificate));
}

TEST_CASE("minor certificates validate on seeded non-series-parallel graphs") {
    int non_sp = 0;
    for (int i = 0; i < 120; ++i) {
        SplitMix64 rng(7000 + i);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 11; ++u)
            for (int v = u + 1; v < 11; ++v)
                if (rng.bernoulli(0.3)) edges.emplace_back(u, v);
        Graph g = build_graph(11, edges);
        SpResult r = is_series_parallel(g);
        if (r.series_parallel) {
            CHECK(validate_sp_reduction(g, r.reduction));
        } else {
            ++non_sp;
            REQUIRE(r.certificate);
            CHECK(validate_k4_minor(g, *r.certificate));
        }
    }
    CHECK(non_sp > 50);  // the sample genuinely exercises the minor extraction
}

TEST_CASE("complete bipartite recognition") {
    auto k33 = complete_bipartite_parts(fixtures::complete_bipartite(3, 3));
    REQUIRE(k33);
    CHECK(k33->first == VertexSet{0, 1, 2});
    CHECK(k33->second == VertexSet{3, 4, 5});

    auto c4 = complete_bipartite_parts(fixtures::cycle(4));
    REQUIRE(c4);
    CHECK(c4->first.size() == 2);

    CHECK(!complete_bipartite_parts(fixtures::cycle(6)));
    CHECK(!complete_bipartite_parts(fixtures::cycle(5)));

    auto edgeless = complete_bipartite_parts(build_graph(3, {}));
    REQUIRE(edgeless);
    CHECK(edgeless->first == VertexSet{0, 1, 2});
    CHECK(edgeless->second.empty());

    auto single = complete_bipartite_parts(build_graph(1, {}));
    REQUIRE(single);
}

TEST_CASE("a fan apex is linked to its C4") {
    Graph g = fan_graph();
    std::vector<int> hole{0, 1, 2, 3};
    LinkageWitness w{4, hole, {Path{4, 0}, Path{4, 1}, Path{4, 2}}};
    CHECK(is_linked(g, w));
    LinkageResult r = find_linkage(g, 4, hole);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(is_linked(g, *r.witness));
}

TEST_CASE("one attachment is not a linkage") {
    // C5 plus a vertex with a single neighbor on it
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}});
    LinkageResult r = find_linkage(g, 5, {0, 1, 2, 3, 4});
    CHECK(r.status == SearchStatus::absent);
}

TEST_CASE("find_linkage validates the hole") {
    Graph g = fixtures::complete(4);
    CHECK_THROWS_AS(find_linkage(g, 0, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("linkage through longer paths") {
    // C6 hole plus v joined by one edge and two 2-edge paths
    Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},  // hole
                              {6, 0},                                          // direct
                              {6, 7}, {7, 2},                                  // via 7
                              {6, 8}, {8, 4}});                                // via 8
    LinkageResult r = find_linkage(g, 6, {0, 1, 2, 3, 4, 5});
    REQUIRE(r.status == SearchStatus::found);
    CHECK(is_linked(g, *r.witness));
}

TEST_CASE("a cross edge between attachment interiors breaks the linkage") {
    // C6 hole, v=6 attached directly and through interiors 7 and 8, which
    // are themselves adjacent
    Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                              {6, 0}, {6, 7}, {7, 2}, {6, 8}, {8, 4}, {7, 8}});
    LinkageWitness w{6, {0, 1, 2, 3, 4, 5}, {Path{6, 0}, Path{6, 7, 2}, Path{6, 8, 4}}};
    CHECK(!is_linked(g, w));
    CHECK(find_linkage(g, 6, {0, 1, 2, 3, 4, 5}).status == SearchStatus::absent);
}

TEST_CASE("adjacent hole endpoints are allowed in a linkage") {
    Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                              {6, 0}, {6, 7}, {7, 1}, {6, 8}, {8, 3}});
    LinkageWitness w{6, {0, 1, 2, 3, 4, 5}, {Path{6, 0}, Path{6, 7, 1}, Path{6, 8, 3}}};
    CHECK(is_linked(g, w));
}

TEST_CASE("class membership verdicts") {
    ClassReport c5 = class_membership(fixtures::cycle(5));
    CHECK(c5.verdict == ClassReport::Verdict::in_class);
    CHECK(c5.exact);

    ClassReport k3 = class_membership(fixtures::complete(3));
    CHECK(k3.verdict == ClassReport::Verdict::out_of_class);
    REQUIRE(k3.triangle);

    ClassReport pet = class_membership(fixtures::petersen());
    CHECK(pet.verdict == ClassReport::Verdict::out_of_class);
    REQUIRE(pet.isk4);
    CHECK(validate_isk4_witness(fixtures::petersen(), *pet.isk4));
}
