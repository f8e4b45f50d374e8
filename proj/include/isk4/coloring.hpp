#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isk4/graph.hpp"
#include "isk4/recognizers.hpp"

namespace isk4 {

using Coloring = std::vector<int>;  // vertex -> {0,1,2}

struct ColorResult {
    enum class Status { success, refused, inconclusive };
    Status status;
    Coloring coloring;                 // success
    std::optional<Triangle> triangle;  // refused, triangle witness
    std::optional<Isk4Witness> isk4;   // refused, ISK4 witness
};

// Certified 3-coloring by induction on the decomposition step: extend past
// a low-degree vertex, 2-color complete bipartite graphs, or split on a
// clique cutset and align the two sub-colorings on it. Out-of-class inputs
// are refused with a witness.
ColorResult three_color(const Graph& g, int exact_bound = kDefaultExactBound,
                        long long budget = kDefaultSearchBudget);

struct ColoringCheck {
    bool ok = true;
    int offending_vertex = -1;              // color out of range
    std::pair<int, int> mono_edge{-1, -1};  // monochromatic edge
};
ColoringCheck verify_coloring(const Graph& g, const Coloring& c);

// Exact chromatic number by backtracking (descending-degree vertex order,
// least color first); nullopt means chi > k_max. Requires k_max <= 4.
std::optional<int> chromatic_oracle(const Graph& g, int k_max);

}  // namespace isk4
