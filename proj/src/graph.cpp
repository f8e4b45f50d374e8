#include "isk4/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace isk4 {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& a : adj) total += a.size();
    return static_cast<int>(total / 2);
}

std::string Graph::label_of(int v) const {
    if (has_labels()) return labels[v];
    return std::to_string(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::same_adjacency(const Graph& other) const {
    return n == other.n && adj == other.adj;
}

Graph build_graph(int order, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::string> labels) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    Graph g;
    g.n = order;
    g.adj.assign(order, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != order)
            throw std::invalid_argument("label count does not match order");
        std::unordered_set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != order)
            throw std::invalid_argument("labels must be unique per vertex");
        g.labels = std::move(labels);
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> to_new(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.n) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("induced_subgraph: keep must be sorted and duplicate-free");
        to_new[v] = static_cast<int>(i);
    }
    Graph h;
    h.n = static_cast<int>(keep.size());
    h.adj.assign(h.n, {});
    for (int i = 0; i < h.n; ++i)
        for (int w : g.adj[keep[i]])
            if (to_new[w] >= 0) h.adj[i].push_back(to_new[w]);
    for (auto& a : h.adj) std::sort(a.begin(), a.end());
    h.labels.reserve(keep.size());
    for (int v : keep) h.labels.push_back(g.label_of(v));
    if (h.n == 0) h.labels.clear();
    return h;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> result;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return components(g).size() == 1;
}

Graph contract_component(const Graph& g, const VertexSet& part, const std::string& tag) {
    if (part.empty()) throw std::invalid_argument("contract_component: part is empty");
    for (int v : part)
        if (v < 0 || v >= g.n) throw std::invalid_argument("contract_component: vertex out of range");
    Graph sub = induced_subgraph(g, part);
    if (!is_connected(sub))
        throw std::invalid_argument("contract_component: part is not connected");

    std::vector<char> in_part(g.n, 0);
    for (int v : part) in_part[v] = 1;
    std::vector<int> to_new(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v)
        if (!in_part[v]) to_new[v] = next++;
    const int z = next;  // contracted vertex, appended last

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (u > v) continue;
            if (in_part[u] && in_part[v]) continue;
            int a = in_part[u] ? z : to_new[u];
            int b = in_part[v] ? z : to_new[v];
            edges.emplace_back(a, b);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(next + 1);
    for (int v = 0; v < g.n; ++v)
        if (!in_part[v]) labels.push_back(g.label_of(v));
    labels.push_back(tag);
    return build_graph(next + 1, edges, std::move(labels));
}

VertexSet sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

bool contains(const VertexSet& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet complement_set(int n, const VertexSet& xs) {
    VertexSet out;
    std::size_t i = 0;
    for (int v = 0; v < n; ++v) {
        if (i < xs.size() && xs[i] == v) {
            ++i;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

VertexSet all_vertices(int n) {
    VertexSet out(n);
    for (int v = 0; v < n; ++v) out[v] = v;
    return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet out = g.adj[v];
    out.push_back(v);
    return sorted_unique(std::move(out));
}

bool is_induced_path(const Graph& g, const Path& p) {
    const int k = static_cast<int>(p.size());
    for (int i = 0; i < k; ++i) {
        if (p[i] < 0 || p[i] >= g.n) return false;
        for (int j = i + 1; j < k; ++j) {
            if (p[i] == p[j]) return false;
            bool adjacent = g.has_edge(p[i], p[j]);
            if (j == i + 1 && !adjacent) return false;
            if (j > i + 1 && adjacent) return false;
        }
    }
    return true;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& c) {
    const int k = static_cast<int>(c.size());
    if (k < 3) return false;
    for (int i = 0; i < k; ++i) {
        if (c[i] < 0 || c[i] >= g.n) return false;
        for (int j = i + 1; j < k; ++j) {
            if (c[i] == c[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (consecutive != g.has_edge(c[i], c[j])) return false;
        }
    }
    return true;
}

std::vector<int> canonical_cycle(const std::vector<int>& c) {
    const int k = static_cast<int>(c.size());
    if (k == 0) return c;
    int pos = static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
    std::vector<int> fwd(k), rev(k);
    for (int i = 0; i < k; ++i) {
        fwd[i] = c[(pos + i) % k];
        rev[i] = c[(pos - i + k) % k];
    }
    return fwd[1] < fwd[k - 1] ? fwd : rev;
}

std::string adjacency_key(const Graph& g) {
    std::string key = std::to_string(g.n);
    key.push_back(':');
    int acc = 0, nbits = 0;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                key.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) key.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return key;
}

std::optional<std::pair<VertexSet, VertexSet>> two_coloring(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (int w : g.adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a, b;
    for (int v = 0; v < g.n; ++v) (color[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

}  // namespace isk4
