#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

inline constexpr long long kDefaultHoleCap = 1'000'000;

// A wheel is a hole (the rim) plus a center with at least three neighbors
// on it. Spokes are the rim neighbors of the center; sectors are the
// maximal rim paths with spoke-free interiors, listed in rim order.
struct Wheel {
    std::vector<int> rim;  // canonical induced cycle, length >= 4
    int center = -1;
    VertexSet spokes;
    std::vector<Path> sectors;

    VertexSet vertex_set() const;  // rim + center, sorted
    int spoke_count() const { return static_cast<int>(spokes.size()); }
};

// Validates rim and center against g and derives spokes and sectors.
Wheel make_wheel(const Graph& g, const std::vector<int>& rim, int center);

struct HoleEnumeration {
    std::vector<std::vector<int>> cycles;  // canonical, (length, lex) order
    bool overflow = false;
};

// Induced cycles of length >= 4 in (length, lexicographic) order,
// truncated at max_count with the overflow flag set.
HoleEnumeration enumerate_holes(const Graph& g, long long max_count = kDefaultHoleCap);
// Same machinery with triangles admitted (min_len 3).
HoleEnumeration enumerate_induced_cycles(const Graph& g, int min_len,
                                         long long max_count = kDefaultHoleCap);

struct WheelSearchResult {
    std::optional<Wheel> wheel;
    bool inconclusive = false;  // enumeration overflowed before an answer
};

// Wheel of minimum rim length; ties broken lexicographically on the rim
// sequence, then on the center.
WheelSearchResult find_wheel(const Graph& g, long long hole_cap = kDefaultHoleCap);

struct ProperWheelReport {
    bool proper;
    int violator = -1;  // vertex outside V(W)
    int bullet = 0;     // 1: rim neighbors span sectors; 2: >=3 rim nbrs, center missed
};
ProperWheelReport is_proper_wheel(const Graph& g, const Wheel& w);
// Single-vertex properness predicate (v outside V(W)).
bool proper_for(const Graph& g, const Wheel& w, int v);

struct FindProperWheelResult {
    std::optional<Wheel> wheel;
    bool improper_only = false;  // wheels exist but none of them is proper
    bool inconclusive = false;
};
FindProperWheelResult find_proper_wheel(const Graph& g, long long hole_cap = kDefaultHoleCap);

struct MinSpokeResult {
    std::optional<Wheel> wheel;
    bool inconclusive = false;
};
// Among proper wheels centered at center: fewest spokes, then shortest rim,
// then lexicographically least rim.
MinSpokeResult min_spoke_proper_wheel(const Graph& g, int center,
                                      long long hole_cap = kDefaultHoleCap);
// All proper wheels centered at center that attain the minimum spoke count.
std::vector<Wheel> all_min_spoke_proper_wheels(const Graph& g, int center,
                                               long long hole_cap = kDefaultHoleCap);

struct CenterResult {
    bool is_center = false;
    bool inconclusive = false;
};
CenterResult is_proper_wheel_center(const Graph& g, int v,
                                    long long hole_cap = kDefaultHoleCap);

// Non-offensive vertex test: x (outside V(W)) is adjacent to the center,
// its rim neighbors live in two consecutive sectors, and the rim neighbors
// of every outside neighbor of x are confined to the same two sectors.
// Returns the shared spoke of the first qualifying consecutive pair.
std::optional<int> is_non_offensive(const Graph& g, const Wheel& w, int x);
bool non_offensive_at(const Graph& g, const Wheel& w, int x, int spoke);

// Marked spokes pairwise non-consecutive, w proper in g minus removed, and
// every removed vertex non-offensive at one of the marked spokes.
bool is_k_almost_proper(const Graph& g, const Wheel& w, const VertexSet& marked_spokes,
                        const VertexSet& removed);

struct WheelmainReport {
    bool pass = true;
    std::string detail;
    VertexSet component;       // offending component, when failing
    std::vector<int> sectors;  // offending sector indices
};
// Checks both conclusions for a minimum-spoke proper wheel: every component
// of V(G) \ N(x) holds at most one sector interior, and per u in N(x) the
// component of V(G) \ (N(x) \ {u}) through u holds at most two, pairwise
// intersecting. Rejects wheels that are not minimum-spoke proper.
WheelmainReport verify_wheelmain(const Graph& g, const Wheel& w);

// Conclusion check for paths outside a minimum-spoke proper wheel with at
// most one center neighbor, including the unique-neighbor conclusion for
// path ends when its hypotheses hold.
bool verify_path_theorem(const Graph& g, const Wheel& w, const Path& p);

}  // namespace isk4
