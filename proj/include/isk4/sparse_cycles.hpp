#pragma once

#include <array>
#include <optional>
#include <vector>

#include "isk4/graph.hpp"
#include "isk4/wheels.hpp"

namespace isk4 {

struct SparseCycleOutcome {
    enum class Kind {
        all_neighborhood,       // V(G) = N[x] ∪ N[y]
        low_degree_far_vertex,  // degree <= 1 outside N[x] ∪ N[y]
        cycle_through_xy,       // induced cycle through x or y
        cycle_with_apex,        // induced cycle avoiding x, y with apex z
    };
    Kind kind;
    int vertex = -1;                 // low_degree_far_vertex
    std::vector<int> cycle;          // cycle outcomes
    int apex = -1;                   // cycle_with_apex
    std::optional<int> exceptional;  // the tolerated high-degree vertex
};

// g \ x must be a forest. Returns the first valid certificate: all of
// N[x] with a stable remainder, a far vertex of degree <= 1, or an induced
// cycle through x whose non-x vertices have degree two except at most one.
SparseCycleOutcome apex_forest_cycle(const Graph& g, int x);

// g series-parallel, x = y or xy an edge, g \ {x,y} containing a cycle.
// Returns an induced cycle avoiding {x,y} with all but at most two vertices
// of degree two in g, or a far vertex of degree <= 1.
SparseCycleOutcome far_cycle_sp(const Graph& g, int x, int y);

struct SparseCycleResult {
    std::optional<SparseCycleOutcome> outcome;
    bool inconclusive = false;
};

// Searches the four outcomes in order; requires x = y or xy an edge. The
// class hypotheses are the caller's responsibility; on out-of-class inputs
// whatever valid certificate exists is returned.
SparseCycleResult sparse_cycle(const Graph& g, int x, int y,
                               long long cycle_cap = kDefaultHoleCap);

// Certificate checkers, re-validating from scratch.
bool check_apex_forest_outcome(const Graph& g, int x, const SparseCycleOutcome& o);
bool check_far_cycle_outcome(const Graph& g, int x, int y, const SparseCycleOutcome& o);
bool check_sparse_cycle_outcome(const Graph& g, int x, int y, const SparseCycleOutcome& o);

struct MinimalK13Result {
    bool is_claw;
    VertexSet subgraph;  // the minimal connected induced subgraph
    int claw_center = -1;
    std::array<int, 3> triangle{-1, -1, -1};  // evidence when not a claw
};

// Minimal connected induced subgraph containing a, b, c (each of degree
// one in g): a subdivided claw with a, b, c as leaves when one exists,
// otherwise a triangle report.
MinimalK13Result minimal_k13(const Graph& g, int a, int b, int c);

}  // namespace isk4
