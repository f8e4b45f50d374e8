#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

inline constexpr int kDefaultExactBound = 14;
inline constexpr int kMaxExactBound = 20;
inline constexpr long long kDefaultSearchBudget = 10'000'000;

enum class SearchStatus { found, absent, inconclusive };

struct Triangle {
    std::array<int, 3> v;  // ascending
};

// Lexicographically least triangle, or nullopt.
std::optional<Triangle> find_triangle(const Graph& g);

struct K33Witness {
    std::array<int, 3> a;  // ascending
    std::array<int, 3> b;  // ascending
};

// K3,3 as a (not necessarily induced) subgraph: all nine cross edges.
std::optional<K33Witness> find_k33_subgraph(const Graph& g);
bool validate_k33_witness(const Graph& g, const K33Witness& w);

struct Isk4Witness {
    VertexSet vertex_set;
    std::array<int, 4> branch;  // the four degree-3 vertices
    // One path per K4 edge, pair order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    // on branch indices; each runs from the lower-index branch vertex.
    std::array<Path, 6> paths;
};
bool validate_isk4_witness(const Graph& g, const Isk4Witness& w);

struct Isk4Result {
    SearchStatus status;
    std::optional<Isk4Witness> witness;
    long long expansions = 0;
};

// Exhaustive over vertex subsets; requires order <= kMaxExactBound.
Isk4Result find_isk4_exact(const Graph& g);
// Branch-vertex / six-path search. Sound always; exhaustive unless the
// expansion budget is hit, in which case status is inconclusive.
Isk4Result find_isk4_search(const Graph& g, long long budget = kDefaultSearchBudget);
Isk4Result find_isk4(const Graph& g, int exact_bound = kDefaultExactBound,
                     long long budget = kDefaultSearchBudget);

struct SpReductionOp {
    enum class Kind { delete_isolated, delete_leaf, suppress, suppress_merge };
    Kind kind;
    int v;
    int u = -1;  // neighbors joined when suppressing
    int w = -1;
};

struct K4MinorCertificate {
    std::array<VertexSet, 4> branch_sets;
    // Connecting edge per branch pair, pair order as in Isk4Witness.
    std::array<std::pair<int, int>, 6> edges;
};

struct SpResult {
    bool series_parallel;
    std::vector<SpReductionOp> reduction;           // when series-parallel
    std::optional<K4MinorCertificate> certificate;  // when not
};

// Repeated degree-<=1 deletion and degree-2 suppression per component.
// A reduction that stalls has minimum degree >= 3 and yields a K4 minor.
SpResult is_series_parallel(const Graph& g);
bool validate_k4_minor(const Graph& g, const K4MinorCertificate& cert);
// Replays a reduction sequence against g; true when it empties the graph.
bool validate_sp_reduction(const Graph& g, const std::vector<SpReductionOp>& ops);

// (A, B) with both sides stable and A complete to B; edgeless graphs and
// single vertices qualify with B empty.
std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_parts(const Graph& g);

struct LinkageWitness {
    int v;
    std::vector<int> hole;
    std::array<Path, 3> paths;  // each from v to its endpoint on the hole
};
bool is_linked(const Graph& g, const LinkageWitness& w);

struct LinkageResult {
    SearchStatus status;
    std::optional<LinkageWitness> witness;
    long long expansions = 0;
};
LinkageResult find_linkage(const Graph& g, int v, const std::vector<int>& hole,
                           long long budget = kDefaultSearchBudget);

struct ClassReport {
    enum class Verdict { in_class, out_of_class, inconclusive };
    Verdict verdict;
    bool exact;  // subset enumeration was used for the ISK4 side
    std::optional<Triangle> triangle;
    std::optional<Isk4Witness> isk4;
};
ClassReport class_membership(const Graph& g, int exact_bound = kDefaultExactBound,
                             long long budget = kDefaultSearchBudget);

}  // namespace isk4
