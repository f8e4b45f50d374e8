#include "isk4/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace isk4 {

namespace {

// Sides after removing `cutset`: the component with the least remaining
// vertex first, everything else second. Empty when removal leaves fewer
// than two sides.
std::optional<std::pair<VertexSet, VertexSet>> split_sides(const Graph& g,
                                                           const VertexSet& cutset) {
    VertexSet kept = complement_set(g.n, cutset);
    if (kept.size() < 2) return std::nullopt;
    Graph h = induced_subgraph(g, kept);
    std::vector<VertexSet> comps = components(h);
    if (comps.size() < 2) return std::nullopt;
    VertexSet side_a, side_b;
    for (int i : comps[0]) side_a.push_back(kept[i]);
    for (std::size_t c = 1; c < comps.size(); ++c)
        for (int i : comps[c]) side_b.push_back(kept[i]);
    std::sort(side_b.begin(), side_b.end());
    return std::make_pair(std::move(side_a), std::move(side_b));
}

}  // namespace

std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
    if (auto tri = find_triangle(g))
        throw std::invalid_argument(
            "find_clique_cutset: input has a triangle; check class_membership first");

    if (auto sides = split_sides(g, {}))
        return CliqueCutset{{}, sides->first, sides->second};
    for (int v = 0; v < g.n; ++v)
        if (auto sides = split_sides(g, {v}))
            return CliqueCutset{{v}, sides->first, sides->second};
    for (const auto& [u, v] : g.edges())
        if (auto sides = split_sides(g, {u, v}))
            return CliqueCutset{{u, v}, sides->first, sides->second};
    return std::nullopt;
}

bool validate_clique_cutset(const Graph& g, const CliqueCutset& c) {
    if (c.side_a.empty() || c.side_b.empty()) return false;
    for (std::size_t i = 0; i < c.cutset.size(); ++i)
        for (std::size_t j = i + 1; j < c.cutset.size(); ++j)
            if (!g.has_edge(c.cutset[i], c.cutset[j])) return false;
    VertexSet everything = set_union(c.cutset, set_union(c.side_a, c.side_b));
    if (everything != all_vertices(g.n)) return false;
    if (!set_intersection(c.side_a, c.side_b).empty()) return false;
    if (!set_intersection(c.cutset, set_union(c.side_a, c.side_b)).empty()) return false;
    for (int u : c.side_a)
        for (int v : c.side_b)
            if (g.has_edge(u, v)) return false;
    return true;
}

std::optional<int> find_low_degree_vertex(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 2) return v;
    return std::nullopt;
}

DecompositionStep decomposition_step(const Graph& g, int exact_bound, long long budget) {
    DecompositionStep step;
    if (auto v = find_low_degree_vertex(g)) {
        step.kind = DecompositionStep::Kind::low_degree_vertex;
        step.vertex = *v;
        return step;
    }
    if (auto parts = complete_bipartite_parts(g)) {
        step.kind = DecompositionStep::Kind::complete_bipartite;
        step.part_a = parts->first;
        step.part_b = parts->second;
        return step;
    }
    if (!find_triangle(g)) {
        if (auto cut = find_clique_cutset(g)) {
            step.kind = DecompositionStep::Kind::clique_cutset;
            step.cut = std::move(cut);
            return step;
        }
    }
    ClassReport report = class_membership(g, exact_bound, budget);
    if (report.verdict == ClassReport::Verdict::inconclusive) {
        step.kind = DecompositionStep::Kind::inconclusive;
        return step;
    }
    // No step applies, so the graph must be outside the class.
    step.kind = DecompositionStep::Kind::not_in_class;
    step.triangle = report.triangle;
    step.isk4 = report.isk4;
    if (report.verdict == ClassReport::Verdict::in_class)
        throw std::logic_error(
            "decomposition_step: no step applies to an in-class graph (theorem violated)");
    return step;
}

StarSubgraph star_component_subgraph(const Graph& g, int s, const VertexSet& k) {
    if (s < 0 || s >= g.n) throw std::invalid_argument("star_component_subgraph: bad vertex");
    VertexSet closed = closed_neighborhood(g, s);
    VertexSet rest = complement_set(g.n, closed);
    Graph outside = induced_subgraph(g, rest);
    bool found = false;
    for (const VertexSet& comp_new : components(outside)) {
        VertexSet comp;
        for (int i : comp_new) comp.push_back(rest[i]);
        if (comp == k) {
            found = true;
            break;
        }
    }
    if (!found)
        throw std::invalid_argument(
            "star_component_subgraph: k is not a component of G minus N[s]");

    VertexSet attach;
    for (int u : g.adj[s])
        for (int w : g.adj[u])
            if (contains(k, w)) {
                attach.push_back(u);
                break;
            }
    VertexSet keep = set_union(k, sorted_unique(attach));
    keep = set_union(keep, VertexSet{s});

    StarSubgraph out{induced_subgraph(g, keep), keep,
                     static_cast<int>(std::lower_bound(keep.begin(), keep.end(), s) -
                                      keep.begin())};
    return out;
}

}  // namespace isk4
