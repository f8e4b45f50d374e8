#pragma once

#include <optional>
#include <vector>

#include "isk4/graph.hpp"
#include "isk4/recognizers.hpp"

namespace isk4 {

struct CliqueCutset {
    VertexSet cutset;  // 0..2 vertices; size 2 only when they form an edge
    VertexSet side_a;  // component with the least remaining vertex
    VertexSet side_b;  // everything else
};

// Least clique cutset under (size, lexicographic) for triangle-free inputs:
// the empty set if disconnected, else a cut vertex, else a cut edge.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g);
bool validate_clique_cutset(const Graph& g, const CliqueCutset& c);

std::optional<int> find_low_degree_vertex(const Graph& g);

struct DecompositionStep {
    enum class Kind {
        low_degree_vertex,
        complete_bipartite,
        clique_cutset,
        not_in_class,
        inconclusive,
    };
    Kind kind;
    int vertex = -1;                   // low_degree_vertex
    VertexSet part_a, part_b;          // complete_bipartite
    std::optional<CliqueCutset> cut;   // clique_cutset
    std::optional<Triangle> triangle;  // not_in_class
    std::optional<Isk4Witness> isk4;   // not_in_class
};

// Checks in fixed order: low-degree vertex, complete bipartite, clique
// cutset; when none applies the graph is outside the class and a witness
// is produced.
DecompositionStep decomposition_step(const Graph& g, int exact_bound = kDefaultExactBound,
                                     long long budget = kDefaultSearchBudget);

// H = G|(K ∪ N ∪ {s}) where N is the set of neighbors of s with a neighbor
// in K; k must be a component of G \ N[s].
struct StarSubgraph {
    Graph h;
    std::vector<int> to_parent;  // new index -> index in g
    int s_index;                 // index of s within h
};
StarSubgraph star_component_subgraph(const Graph& g, int s, const VertexSet& k);

}  // namespace isk4
