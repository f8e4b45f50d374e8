#include "isk4/sparse_cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include "isk4/recognizers.hpp"

namespace isk4 {

namespace {

bool is_forest(const Graph& g) {
    // acyclic iff every component has |V| - 1 edges
    long long edge_total = g.edge_count();
    long long expected = g.n - static_cast<long long>(components(g).size());
    return edge_total == expected;
}

VertexSet far_set(const Graph& g, int x, int y) {
    VertexSet shield = closed_neighborhood(g, x);
    if (y != x) shield = set_union(shield, closed_neighborhood(g, y));
    return complement_set(g.n, shield);
}

// Induced cycles of g avoiding {x, y}, mapped back to g's vertex ids and
// listed in (length, lex) order.
std::vector<std::vector<int>> cycles_avoiding(const Graph& g, int x, int y, int min_len,
                                              long long cap, bool& overflow) {
    VertexSet keep = complement_set(g.n, sorted_unique({x, y}));
    Graph h = induced_subgraph(g, keep);
    HoleEnumeration eno = enumerate_induced_cycles(h, min_len, cap);
    overflow = eno.overflow;
    std::vector<std::vector<int>> out;
    out.reserve(eno.cycles.size());
    for (const auto& c : eno.cycles) {
        std::vector<int> mapped;
        mapped.reserve(c.size());
        for (int v : c) mapped.push_back(keep[v]);
        out.push_back(canonical_cycle(mapped));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::optional<int> single_exception(const std::vector<int>& suspects) {
    if (suspects.size() > 1) return std::nullopt;  // caller treats as failure
    if (suspects.empty()) return std::optional<int>{};
    return suspects.front();
}

}  // namespace

SparseCycleOutcome apex_forest_cycle(const Graph& g, int x) {
    if (x < 0 || x >= g.n) throw std::invalid_argument("apex_forest_cycle: bad vertex");
    {
        VertexSet keep = complement_set(g.n, {x});
        if (!is_forest(induced_subgraph(g, keep)))
            throw std::invalid_argument("apex_forest_cycle: g minus x is not a forest");
    }

    // outcome 1: V(G) = N[x] with a stable remainder
    VertexSet closed = closed_neighborhood(g, x);
    if (static_cast<int>(closed.size()) == g.n) {
        bool stable = true;
        for (const auto& [u, v] : g.edges())
            if (u != x && v != x) stable = false;
        if (stable) {
            SparseCycleOutcome o;
            o.kind = SparseCycleOutcome::Kind::all_neighborhood;
            return o;
        }
    }
    // outcome 2: far vertex of degree <= 1
    for (int v : far_set(g, x, x)) {
        if (g.degree(v) > 1) continue;
        SparseCycleOutcome o;
        o.kind = SparseCycleOutcome::Kind::low_degree_far_vertex;
        o.vertex = v;
        return o;
    }
    // outcome 3: induced cycle through x, all non-x vertices of degree two
    // except at most one
    HoleEnumeration eno = enumerate_induced_cycles(g, 3, kDefaultHoleCap);
    for (const auto& c : eno.cycles) {
        if (!contains(sorted_unique(c), x)) continue;
        std::vector<int> suspects;
        for (int v : c)
            if (v != x && g.degree(v) != 2) suspects.push_back(v);
        if (suspects.size() <= 1) {
            SparseCycleOutcome o;
            o.kind = SparseCycleOutcome::Kind::cycle_through_xy;
            o.cycle = c;
            o.exceptional = single_exception(suspects);
            return o;
        }
    }
    throw std::logic_error("apex_forest_cycle: no certificate found (lemma violated)");
}

bool check_apex_forest_outcome(const Graph& g, int x, const SparseCycleOutcome& o) {
    switch (o.kind) {
        case SparseCycleOutcome::Kind::all_neighborhood: {
            if (static_cast<int>(closed_neighborhood(g, x).size()) != g.n) return false;
            for (const auto& [u, v] : g.edges())
                if (u != x && v != x) return false;
            return true;
        }
        case SparseCycleOutcome::Kind::low_degree_far_vertex:
            return contains(far_set(g, x, x), o.vertex) && g.degree(o.vertex) <= 1;
        case SparseCycleOutcome::Kind::cycle_through_xy: {
            if (!is_induced_cycle(g, o.cycle)) return false;
            if (!contains(sorted_unique(o.cycle), x)) return false;
            int bad = 0;
            for (int v : o.cycle)
                if (v != x && g.degree(v) != 2) ++bad;
            return bad <= 1;
        }
        default:
            return false;
    }
}

SparseCycleOutcome far_cycle_sp(const Graph& g, int x, int y) {
    if (x < 0 || x >= g.n || y < 0 || y >= g.n)
        throw std::invalid_argument("far_cycle_sp: bad vertex");
    if (x != y && !g.has_edge(x, y))
        throw std::invalid_argument("far_cycle_sp: x and y must coincide or be adjacent");
    if (!is_series_parallel(g).series_parallel)
        throw std::invalid_argument("far_cycle_sp: graph is not series-parallel");
    {
        VertexSet keep = complement_set(g.n, sorted_unique({x, y}));
        if (is_forest(induced_subgraph(g, keep)))
            throw std::invalid_argument("far_cycle_sp: g minus {x,y} has no cycle");
    }

    for (int v : far_set(g, x, y)) {
        if (g.degree(v) > 1) continue;
        SparseCycleOutcome o;
        o.kind = SparseCycleOutcome::Kind::low_degree_far_vertex;
        o.vertex = v;
        return o;
    }

    bool overflow = false;
    for (const auto& c : cycles_avoiding(g, x, y, 3, kDefaultHoleCap, overflow)) {
        std::vector<int> suspects;
        for (int v : c)
            if (g.degree(v) != 2) suspects.push_back(v);
        if (suspects.size() <= 2) {
            SparseCycleOutcome o;
            o.kind = SparseCycleOutcome::Kind::cycle_with_apex;
            o.cycle = c;
            o.apex = -1;  // no apex in the series-parallel outcome
            return o;
        }
    }
    throw std::logic_error("far_cycle_sp: no certificate found (lemma violated)");
}

bool check_far_cycle_outcome(const Graph& g, int x, int y, const SparseCycleOutcome& o) {
    switch (o.kind) {
        case SparseCycleOutcome::Kind::low_degree_far_vertex:
            return contains(far_set(g, x, y), o.vertex) && g.degree(o.vertex) <= 1;
        case SparseCycleOutcome::Kind::cycle_with_apex: {
            if (!is_induced_cycle(g, o.cycle)) return false;
            VertexSet cs = sorted_unique(o.cycle);
            if (contains(cs, x) || contains(cs, y)) return false;
            int bad = 0;
            for (int v : o.cycle)
                if (g.degree(v) != 2) ++bad;
            return bad <= 2;
        }
        default:
            return false;
    }
}

SparseCycleResult sparse_cycle(const Graph& g, int x, int y, long long cycle_cap) {
    if (x < 0 || x >= g.n || y < 0 || y >= g.n)
        throw std::invalid_argument("sparse_cycle: bad vertex");
    if (x != y && !g.has_edge(x, y))
        throw std::invalid_argument("sparse_cycle: x and y must coincide or be adjacent");

    SparseCycleResult res;
    VertexSet shield = closed_neighborhood(g, x);
    if (y != x) shield = set_union(shield, closed_neighborhood(g, y));
    if (static_cast<int>(shield.size()) == g.n) {
        SparseCycleOutcome o;
        o.kind = SparseCycleOutcome::Kind::all_neighborhood;
        res.outcome = std::move(o);
        return res;
    }
    for (int v : far_set(g, x, y)) {
        if (g.degree(v) <= 1) {
            SparseCycleOutcome o;
            o.kind = SparseCycleOutcome::Kind::low_degree_far_vertex;
            o.vertex = v;
            res.outcome = std::move(o);
            return res;
        }
    }

    HoleEnumeration eno = enumerate_induced_cycles(g, 3, cycle_cap);
    // outcome 3: cycle through x or y, at most one far vertex of degree > 2
    for (const auto& c : eno.cycles) {
        VertexSet cs = sorted_unique(c);
        if (!contains(cs, x) && !contains(cs, y)) continue;
        std::vector<int> suspects;
        for (int v : c)
            if (contains(far_set(g, x, y), v) && g.degree(v) > 2) suspects.push_back(v);
        if (suspects.size() <= 1) {
            SparseCycleOutcome o;
            o.kind = SparseCycleOutcome::Kind::cycle_through_xy;
            o.cycle = c;
            o.exceptional = single_exception(suspects);
            res.outcome = std::move(o);
            return res;
        }
    }
    // outcome 4: cycle avoiding x and y with an apex
    for (const auto& c : eno.cycles) {
        VertexSet cs = sorted_unique(c);
        if (contains(cs, x) || contains(cs, y)) continue;
        for (int z : cs) {
            std::vector<int> suspects;
            for (int v : c)
                if (!contains(closed_neighborhood(g, z), v) && g.degree(v) > 2)
                    suspects.push_back(v);
            if (suspects.size() <= 1) {
                SparseCycleOutcome o;
            o.kind = SparseCycleOutcome::Kind::cycle_with_apex;
                o.cycle = c;
                o.apex = z;
                o.exceptional = single_exception(suspects);
                res.outcome = std::move(o);
                return res;
            }
        }
    }
    res.inconclusive = eno.overflow;
    return res;
}

bool check_sparse_cycle_outcome(const Graph& g, int x, int y, const SparseCycleOutcome& o) {
    switch (o.kind) {
        case SparseCycleOutcome::Kind::all_neighborhood: {
            VertexSet shield = closed_neighborhood(g, x);
            if (y != x) shield = set_union(shield, closed_neighborhood(g, y));
            return static_cast<int>(shield.size()) == g.n;
        }
        case SparseCycleOutcome::Kind::low_degree_far_vertex:
            return contains(far_set(g, x, y), o.vertex) && g.degree(o.vertex) <= 1;
        case SparseCycleOutcome::Kind::cycle_through_xy: {
            if (!is_induced_cycle(g, o.cycle)) return false;
            VertexSet cs = sorted_unique(o.cycle);
            if (!contains(cs, x) && !contains(cs, y)) return false;
            int bad = 0;
            for (int v : o.cycle)
                if (contains(far_set(g, x, y), v) && g.degree(v) > 2) ++bad;
            return bad <= 1;
        }
        case SparseCycleOutcome::Kind::cycle_with_apex: {
            if (!is_induced_cycle(g, o.cycle)) return false;
            VertexSet cs = sorted_unique(o.cycle);
            if (contains(cs, x) || contains(cs, y)) return false;
            if (!contains(cs, o.apex)) return false;
            int bad = 0;
            for (int v : o.cycle)
                if (!contains(closed_neighborhood(g, o.apex), v) && g.degree(v) > 2) ++bad;
            return bad <= 1;
        }
    }
    return false;
}

MinimalK13Result minimal_k13(const Graph& g, int a, int b, int c) {
    if (a < 0 || a >= g.n || b < 0 || b >= g.n || c < 0 || c >= g.n || a == b || b == c ||
        a == c)
        throw std::invalid_argument("minimal_k13: bad leaf vertices");
    if (!is_connected(g)) throw std::invalid_argument("minimal_k13: graph is not connected");
    for (int v : {a, b, c})
        if (g.degree(v) != 1)
            throw std::invalid_argument("minimal_k13: leaves must have degree one");

    auto classify_claw = [&](const VertexSet& vs) -> std::optional<int> {
        Graph h = induced_subgraph(g, vs);
        if (h.edge_count() != h.n - 1) return std::nullopt;  // must be a tree
        int center = -1;
        for (int i = 0; i < h.n; ++i) {
            int d = h.degree(i);
            if (d == 3) {
                if (center >= 0) return std::nullopt;
                center = vs[i];
            } else if (d == 1) {
                if (vs[i] != a && vs[i] != b && vs[i] != c) return std::nullopt;
            } else if (d != 2) {
                return std::nullopt;
            }
        }
        return center >= 0 ? std::optional<int>(center) : std::nullopt;
    };

    // shrink greedily to an inclusion-minimal connected superset of {a,b,c}
    VertexSet current = all_vertices(g.n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : current) {
            if (v == a || v == b || v == c) continue;
            VertexSet smaller = set_difference(current, {v});
            Graph h = induced_subgraph(g, smaller);
            if (!is_connected(h)) continue;
            current = std::move(smaller);
            changed = true;
            break;
        }
    }

    MinimalK13Result res;
    if (auto center = classify_claw(current)) {
        res.is_claw = true;
        res.subgraph = current;
        res.claw_center = *center;
        return res;
    }

    // an induced subdivided claw with leaves a, b, c is itself minimal;
    // search for one before reporting triangles
    std::vector<char> used(g.n, 0);
    std::array<int, 3> leaves{a, b, c};
    std::vector<Path> legs(3);
    std::optional<int> found_center;
    auto legs_ok = [&](int w, const Path& candidate, int upto) {
        // candidate must stay induced against the finished legs
        for (int i = 0; i < upto; ++i)
            for (int u : legs[i])
                for (int v : candidate)
                    if (u != w && v != w && u != v && g.has_edge(u, v)) return false;
        return true;
    };
    auto grow = [&](auto&& self, int w, int li, Path& p) -> bool {
        const int last = p.back();
        if (last == leaves[li]) {
            if (!legs_ok(w, p, li)) return false;
            legs[li] = p;
            if (li == 2) return true;
            Path q{w};
            if (self(self, w, li + 1, q)) return true;
            return false;
        }
        for (int u : g.adj[last]) {
            if (used[u]) continue;
            bool chord = false;
            for (std::size_t t = 0; t + 1 < p.size(); ++t)
                if (g.has_edge(u, p[t])) chord = true;
            if (chord) continue;
            used[u] = 1;
            p.push_back(u);
            if (self(self, w, li, p)) return true;
            p.pop_back();
            used[u] = 0;
        }
        return false;
    };
    for (int w = 0; w < g.n && !found_center; ++w) {
        if (w == a || w == b || w == c || g.degree(w) < 3) continue;
        std::fill(used.begin(), used.end(), 0);
        used[w] = 1;
        Path p{w};
        if (grow(grow, w, 0, p)) found_center = w;
    }
    if (found_center) {
        VertexSet vs;
        for (const Path& leg : legs)
            for (int v : leg) vs.push_back(v);
        res.is_claw = true;
        res.subgraph = sorted_unique(std::move(vs));
        res.claw_center = *found_center;
        return res;
    }

    // no subdivided claw exists at all, so every minimal connected induced
    // subgraph through a, b, c contains a triangle; report one from ours
    Graph h = induced_subgraph(g, current);
    auto tri = find_triangle(h);
    if (!tri) throw std::logic_error("minimal_k13: no claw and no triangle (lemma violated)");
    res.is_claw = false;
    res.subgraph = current;
    res.triangle = {current[tri->v[0]], current[tri->v[1]], current[tri->v[2]]};
    return res;
}

}  // namespace isk4
