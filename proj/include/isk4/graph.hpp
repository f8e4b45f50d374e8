#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isk4 {

// Vertices are dense 0-based indices. A VertexSet is sorted and
// duplicate-free; a Path is an ordered vertex sequence.
using VertexSet = std::vector<int>;
using Path = std::vector<int>;

// Immutable simple undirected graph. Adjacency is symmetric, sorted and
// loop-free. Labels, when present, are unique per vertex and survive
// induced_subgraph / contract_component, so vertices of derived graphs can
// be traced back to the graph they came from.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj[v]; }
    int edge_count() const;
    bool has_labels() const { return !labels.empty(); }
    // Label of v, falling back to the decimal index when labels are absent.
    std::string label_of(int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    bool same_adjacency(const Graph& other) const;
};

// Rejects self-loops and out-of-range endpoints; duplicate edges collapse.
Graph build_graph(int order, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels = {});

// G|keep. Vertices are relabeled densely in ascending order of keep.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Replaces a non-empty connected part by a single new vertex carrying
// `tag`. Remaining vertices keep their relative order; the new vertex is
// appended last and is adjacent to exactly the outside neighbors of part.
Graph contract_component(const Graph& g, const VertexSet& part, const std::string& tag);

VertexSet sorted_unique(std::vector<int> xs);
bool contains(const VertexSet& xs, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet complement_set(int n, const VertexSet& xs);
VertexSet all_vertices(int n);
VertexSet closed_neighborhood(const Graph& g, int v);

// Paths and cycles follow the induced convention: consecutive vertices
// adjacent, all other pairs non-adjacent.
bool is_induced_path(const Graph& g, const Path& p);
bool is_induced_cycle(const Graph& g, const std::vector<int>& c);

// Rotation/reflection with c[0] minimal and c[1] < c.back().
std::vector<int> canonical_cycle(const std::vector<int>& c);

// Deterministic byte key of order plus adjacency bits (memoization).
std::string adjacency_key(const Graph& g);

// Bipartition (side containing vertex 0 first) or nullopt.
std::optional<std::pair<VertexSet, VertexSet>> two_coloring(const Graph& g);

}  // namespace isk4
