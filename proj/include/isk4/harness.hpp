#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isk4/graph.hpp"

namespace isk4 {

// One representative per isomorphism class, orders 0..max_order (<= 7),
// sorted by (order, canonical adjacency bits).
std::vector<Graph> enumerate_all_graphs(int max_order);

// Minimum adjacency bit string over all vertex permutations, packed
// first-pair-first into the high bits; requires n <= 8.
std::uint32_t canonical_bits(const Graph& g);
Graph graph_from_canonical_bits(int n, std::uint32_t bits);

// Random series-parallel graph on exactly n vertices built by seeded edge
// subdivision, two-edge ears and pendants starting from K2.
Graph gen_series_parallel(int n, std::uint64_t seed);

// Wheel with the given spoke count (>= 4) and per-sector interior lengths
// (each >= 1); vertices are rim in cyclic order, then the center last.
// The result is validated triangle-free and ISK4-free.
Graph gen_wheel(int spokes, const std::vector<int>& sector_interior_lengths);

// One fresh K3,3 per base vertex, the base vertex identified with a vertex
// of its own copy.
Graph gen_k33_glued(const Graph& base);

// G(n, p) with the documented splitmix64 scheme.
Graph gen_random(int n, double edge_probability, std::uint64_t seed);

struct CorpusSpec {
    enum class Source { internal, file, gen_sp, gen_random };
    Source source = Source::internal;
    int max_order = 7;         // internal
    std::string path;          // file (graph6, one per line)
    int count = 0;             // generators
    std::uint64_t seed = 0;    // generators
    int size = 0;              // gen_sp: max order; gen_random: order
    double p = 0.0;            // gen_random edge probability
    bool filter_triangle_free = false;
    bool filter_isk4_free = false;
    bool filter_k33_free = false;
    bool filter_connected = false;

    std::string describe() const;
    static CorpusSpec parse(const std::string& text);  // e.g. "internal:7"
};
std::vector<Graph> load_corpus(const CorpusSpec& spec);

struct SuiteFailure {
    std::string graph6;
    std::string certificate;  // JSON text of the violation
};

struct SuiteReport {
    std::string suite;
    std::string corpus;
    int checked = 0;
    int skipped = 0;  // instances outside the suite's hypotheses
    int inconclusive = 0;
    std::vector<SuiteFailure> failures;
    double wall_ms = 0.0;  // diagnostic only, not part of the canonical text

    bool pass() const { return failures.empty() && inconclusive == 0; }
    // Deterministic rendering: identical runs give identical bytes.
    std::string canonical_text() const;
    std::string canonical_json() const;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, const CorpusSpec& corpus, int jobs = 1,
                      bool progress = false);

}  // namespace isk4
