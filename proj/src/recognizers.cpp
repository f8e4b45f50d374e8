#include "isk4/recognizers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace isk4 {

namespace {

constexpr std::array<std::pair<int, int>, 6> kK4Pairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int i, int j) {
    for (int e = 0; e < 6; ++e)
        if (kK4Pairs[e].first == i && kK4Pairs[e].second == j) return e;
    return -1;
}

}  // namespace

std::optional<Triangle> find_triangle(const Graph& g) {
    for (int a = 0; a < g.n; ++a) {
        for (int b : g.adj[a]) {
            if (b <= a) continue;
            for (int c : g.adj[a]) {
                if (c <= b) continue;
                if (g.has_edge(b, c)) return Triangle{{a, b, c}};
            }
        }
    }
    return std::nullopt;
}

std::optional<K33Witness> find_k33_subgraph(const Graph& g) {
    for (int a1 = 0; a1 < g.n; ++a1) {
        if (g.degree(a1) < 3) continue;
        for (int a2 = a1 + 1; a2 < g.n; ++a2) {
            if (g.degree(a2) < 3) continue;
            VertexSet common12 = set_intersection(g.adj[a1], g.adj[a2]);
            if (common12.size() < 3) continue;
            for (int a3 = a2 + 1; a3 < g.n; ++a3) {
                if (g.degree(a3) < 3) continue;
                VertexSet common = set_intersection(common12, g.adj[a3]);
                if (common.size() < 3) continue;
                return K33Witness{{a1, a2, a3}, {common[0], common[1], common[2]}};
            }
        }
    }
    return std::nullopt;
}

bool validate_k33_witness(const Graph& g, const K33Witness& w) {
    std::set<int> all;
    for (int v : w.a) all.insert(v);
    for (int v : w.b) all.insert(v);
    if (all.size() != 6) return false;
    for (int u : w.a) {
        if (u < 0 || u >= g.n) return false;
        for (int v : w.b)
            if (!g.has_edge(u, v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// ISK4 detection

bool validate_isk4_witness(const Graph& g, const Isk4Witness& w) {
    const VertexSet& vs = w.vertex_set;
    if (vs.empty() || sorted_unique(vs) != vs) return false;
    for (int v : vs)
        if (v < 0 || v >= g.n) return false;

    // induced degrees: branch vertices 3, all others 2
    std::map<int, int> deg;
    for (int v : vs) {
        int d = 0;
        for (int u : vs)
            if (u != v && g.has_edge(u, v)) ++d;
        deg[v] = d;
    }
    VertexSet branch_sorted(w.branch.begin(), w.branch.end());
    std::sort(branch_sorted.begin(), branch_sorted.end());
    VertexSet deg3;
    for (auto [v, d] : deg) {
        if (d == 3) deg3.push_back(v);
        else if (d != 2) return false;
    }
    if (deg3 != branch_sorted) return false;

    // the six paths partition the subdivision: internally disjoint, cover vs
    std::set<int> interior_seen;
    std::set<int> covered(branch_sorted.begin(), branch_sorted.end());
    for (int e = 0; e < 6; ++e) {
        const Path& p = w.paths[e];
        if (p.size() < 2) return false;
        if (p.front() != w.branch[kK4Pairs[e].first] || p.back() != w.branch[kK4Pairs[e].second])
            return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (std::count(branch_sorted.begin(), branch_sorted.end(), p[i])) return false;
            if (!interior_seen.insert(p[i]).second) return false;
            covered.insert(p[i]);
        }
    }
    if (VertexSet(covered.begin(), covered.end()) != vs) return false;
    return true;
}

namespace {

// Subdivision-of-K4 test for a subset mask; adj_mask rows restricted by the
// caller. Fills witness on success.
bool mask_is_isk4(const Graph& g, const std::vector<std::uint32_t>& adj_mask,
                  std::uint32_t mask, Isk4Witness* out) {
    VertexSet verts, deg3;
    for (int v = 0; v < g.n; ++v) {
        if (!((mask >> v) & 1)) continue;
        verts.push_back(v);
        int d = __builtin_popcount(adj_mask[v] & mask);
        if (d == 3) deg3.push_back(v);
        else if (d != 2) return false;
    }
    if (deg3.size() != 4) return false;

    // connectivity over the mask
    std::uint32_t seen = 1u << verts[0];
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1) next |= adj_mask[v] & mask;
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    if (seen != mask) return false;

    // suppression: trace from each branch vertex along each incident edge
    std::array<int, 4> branch{deg3[0], deg3[1], deg3[2], deg3[3]};
    auto branch_index = [&](int v) {
        for (int i = 0; i < 4; ++i)
            if (branch[i] == v) return i;
        return -1;
    };
    std::array<Path, 6> paths;
    std::array<int, 6> found{};
    std::uint32_t visited = 0;
    for (int i = 0; i < 4; ++i) visited |= 1u << branch[i];
    for (int i = 0; i < 4; ++i) {
        for (int w0 : g.adj[branch[i]]) {
            if (!((mask >> w0) & 1)) continue;
            Path p{branch[i]};
            int prev = branch[i], cur = w0;
            while (branch_index(cur) < 0) {
                p.push_back(cur);
                visited |= 1u << cur;
                int nxt = -1;
                for (int u : g.adj[cur]) {
                    if (!((mask >> u) & 1) || u == prev) continue;
                    nxt = u;
                    break;
                }
                if (nxt < 0) return false;
                prev = cur;
                cur = nxt;
            }
            p.push_back(cur);
            int j = branch_index(cur);
            if (j == i) return false;  // loop back to the same branch vertex
            if (i < j) {
                int e = pair_index(i, j);
                if (found[e]++) return false;  // parallel paths between a pair
                paths[e] = p;
            }
        }
    }
    for (int e = 0; e < 6; ++e)
        if (found[e] != 1) return false;
    if (visited != mask) return false;

    if (out) {
        out->vertex_set = verts;
        out->branch = branch;
        out->paths = paths;
    }
    return true;
}

}  // namespace

Isk4Result find_isk4_exact(const Graph& g) {
    if (g.n > kMaxExactBound)
        throw std::invalid_argument("find_isk4_exact: order exceeds the exact bound");
    std::vector<std::uint32_t> adj_mask(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) adj_mask[v] |= 1u << u;

    Isk4Result res{SearchStatus::absent, std::nullopt, 0};
    const std::uint32_t end = 1u << g.n;
    for (std::uint32_t m = 1; m < end; ++m) {
        if (__builtin_popcount(m) < 4) continue;
        ++res.expansions;
        Isk4Witness w;
        if (mask_is_isk4(g, adj_mask, m, &w)) {
            res.status = SearchStatus::found;
            res.witness = std::move(w);
            return res;
        }
    }
    return res;
}

namespace {

struct Isk4SearchCtx {
    const Graph& g;
    long long budget;
    bool exhausted = false;
    std::vector<char> committed;
    std::array<int, 4> branch{};
    std::array<Path, 6> paths;

    explicit Isk4SearchCtx(const Graph& g_, long long budget_)
        : g(g_), budget(budget_), committed(g_.n, 0) {}

    bool tick() {
        if (--budget < 0) {
            exhausted = true;
            return false;
        }
        return true;
    }

    // May w be appended after `last` on the path towards bj? Its committed
    // neighbors must be exactly {last}, plus bj when the path closes there.
    bool extension_ok(int w, int last, int bj) const {
        if (committed[w]) return false;
        for (int u : g.adj[w])
            if (committed[u] && u != last && u != bj) return false;
        return true;
    }

    bool solve(int e) {
        if (e == 6) return true;
        const int bi = branch[kK4Pairs[e].first];
        const int bj = branch[kK4Pairs[e].second];
        if (g.has_edge(bi, bj)) {
            // an adjacent branch pair forces the one-edge path
            paths[e] = {bi, bj};
            return solve(e + 1);
        }
        Path p{bi};
        return grow(e, p, bj);
    }

    bool grow(int e, Path& p, int bj) {
        const int last = p.back();
        for (int w : g.adj[last]) {
            if (!tick()) return false;
            if (!extension_ok(w, last, bj)) continue;
            p.push_back(w);
            committed[w] = 1;
            if (g.has_edge(w, bj)) {
                // w adjacent to the target closes the path; extending past w
                // would leave a chord
                p.push_back(bj);
                paths[e] = p;
                if (solve(e + 1)) return true;
                p.pop_back();
            } else {
                if (grow(e, p, bj)) return true;
            }
            committed[w] = 0;
            p.pop_back();
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

Isk4Result find_isk4_search(const Graph& g, long long budget) {
    Isk4Result res{SearchStatus::absent, std::nullopt, 0};
    VertexSet candidates;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 3) candidates.push_back(v);
    const int c = static_cast<int>(candidates.size());
    Isk4SearchCtx ctx(g, budget);
    for (int i0 = 0; i0 < c; ++i0)
        for (int i1 = i0 + 1; i1 < c; ++i1)
            for (int i2 = i1 + 1; i2 < c; ++i2)
                for (int i3 = i2 + 1; i3 < c; ++i3) {
                    ctx.branch = {candidates[i0], candidates[i1], candidates[i2],
                                  candidates[i3]};
                    for (int b : ctx.branch) ctx.committed[b] = 1;
                    bool ok = ctx.solve(0);
                    for (int b : ctx.branch) ctx.committed[b] = 0;
                    if (ok) {
                        Isk4Witness w;
                        w.branch = ctx.branch;
                        w.paths = ctx.paths;
                        VertexSet vs;
                        for (const Path& p : w.paths)
                            for (int v : p) vs.push_back(v);
                        w.vertex_set = sorted_unique(std::move(vs));
                        res.status = SearchStatus::found;
                        res.witness = std::move(w);
                        res.expansions = budget - ctx.budget;
                        return res;
                    }
                    if (ctx.exhausted) {
                        res.status = SearchStatus::inconclusive;
                        res.expansions = budget - ctx.budget;
                        return res;
                    }
                }
    res.expansions = budget - ctx.budget;
    return res;
}

Isk4Result find_isk4(const Graph& g, int exact_bound, long long budget) {
    if (exact_bound > kMaxExactBound) exact_bound = kMaxExactBound;
    if (g.n <= exact_bound) return find_isk4_exact(g);
    return find_isk4_search(g, budget);
}

// ---------------------------------------------------------------------------
// series-parallel recognition

namespace {

struct ReductionState {
    std::vector<std::set<int>> adj;
    std::vector<char> alive;
    // representative original path for each current edge, keyed by (min,max);
    // interiors are pairwise disjoint and avoid current vertices
    std::map<std::pair<int, int>, Path> rep;

    Path rep_of(int u, int v) const {
        auto it = rep.find({std::min(u, v), std::max(u, v)});
        Path p = it->second;
        if (p.front() != u) std::reverse(p.begin(), p.end());
        return p;
    }

    void drop_edge(int u, int v) {
        adj[u].erase(v);
        adj[v].erase(u);
        rep.erase({std::min(u, v), std::max(u, v)});
    }

    void add_edge(int u, int v, Path path) {
        adj[u].insert(v);
        adj[v].insert(u);
        if (path.front() != std::min(u, v)) std::reverse(path.begin(), path.end());
        rep[{std::min(u, v), std::max(u, v)}] = std::move(path);
    }
};

// K4 subdivision as a subgraph of the stalled reduction graph (minimum
// degree >= 3 guarantees one exists): four branch vertices plus six
// internally disjoint connecting paths.
struct SubgraphK4Search {
    const ReductionState& st;
    int n;
    std::vector<char> used;
    std::array<int, 4> branch{};
    std::array<Path, 6> paths;
    long long budget = 50'000'000;

    explicit SubgraphK4Search(const ReductionState& s, int n_) : st(s), n(n_), used(n_, 0) {}

    bool solve(int e) {
        if (e == 6) return true;
        const int bi = branch[kK4Pairs[e].first];
        const int bj = branch[kK4Pairs[e].second];
        Path p{bi};
        return grow(e, p, bj);
    }

    bool grow(int e, Path& p, int bj) {
        if (--budget < 0) return false;
        const int last = p.back();
        if (st.adj[last].count(bj)) {
            p.push_back(bj);
            paths[e] = p;
            if (solve(e + 1)) return true;
            p.pop_back();
        }
        for (int w : st.adj[last]) {
            if (used[w] || w == bj) continue;
            bool is_branch = false;
            for (int b : branch)
                if (b == w) is_branch = true;
            if (is_branch) continue;
            used[w] = 1;
            p.push_back(w);
            if (grow(e, p, bj)) return true;
            p.pop_back();
            used[w] = 0;
        }
        return false;
    }

    bool run() {
        VertexSet cand;
        for (int v = 0; v < n; ++v)
            if (st.alive[v] && st.adj[v].size() >= 3) cand.push_back(v);
        const int c = static_cast<int>(cand.size());
        for (int i0 = 0; i0 < c; ++i0)
            for (int i1 = i0 + 1; i1 < c; ++i1)
                for (int i2 = i1 + 1; i2 < c; ++i2)
                    for (int i3 = i2 + 1; i3 < c; ++i3) {
                        branch = {cand[i0], cand[i1], cand[i2], cand[i3]};
                        std::fill(used.begin(), used.end(), 0);
                        for (int b : branch) used[b] = 1;
                        if (solve(0)) return true;
                    }
        return false;
    }
};

}  // namespace

SpResult is_series_parallel(const Graph& g) {
    ReductionState st;
    st.adj.assign(g.n, {});
    st.alive.assign(g.n, 1);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) st.adj[v].insert(u);
    for (auto [u, v] : g.edges()) st.rep[{u, v}] = Path{u, v};

    SpResult res;
    res.series_parallel = true;
    int remaining = g.n;
    bool progress = true;
    while (progress && remaining > 0) {
        progress = false;
        for (int v = 0; v < g.n && !progress; ++v) {
            if (!st.alive[v]) continue;
            const std::size_t d = st.adj[v].size();
            if (d == 0) {
                st.alive[v] = 0;
                --remaining;
                res.reduction.push_back({SpReductionOp::Kind::delete_isolated, v});
                progress = true;
            } else if (d == 1) {
                int u = *st.adj[v].begin();
                st.drop_edge(v, u);
                st.alive[v] = 0;
                --remaining;
                res.reduction.push_back({SpReductionOp::Kind::delete_leaf, v, u});
                progress = true;
            } else if (d == 2) {
                auto it = st.adj[v].begin();
                int u = *it++;
                int w = *it;
                Path pu = st.rep_of(u, v);
                Path pw = st.rep_of(v, w);
                st.drop_edge(v, u);
                st.drop_edge(v, w);
                st.alive[v] = 0;
                --remaining;
                if (st.adj[u].count(w)) {
                    res.reduction.push_back({SpReductionOp::Kind::suppress_merge, v, u, w});
                } else {
                    pu.insert(pu.end(), pw.begin() + 1, pw.end());
                    st.add_edge(u, w, std::move(pu));
                    res.reduction.push_back({SpReductionOp::Kind::suppress, v, u, w});
                }
                progress = true;
            }
        }
    }
    if (remaining == 0) return res;

    // stalled: minimum degree >= 3 among the living vertices
    res.series_parallel = false;
    res.reduction.clear();
    SubgraphK4Search search(st, g.n);
    if (!search.run()) return res;  // budget safety valve; certificate omitted

    K4MinorCertificate cert;
    for (int i = 0; i < 4; ++i) cert.branch_sets[i] = {search.branch[i]};
    for (int e = 0; e < 6; ++e) {
        // lift the stall-graph path through the suppressed representatives
        const Path& hp = search.paths[e];
        Path lifted{hp.front()};
        for (std::size_t i = 0; i + 1 < hp.size(); ++i) {
            Path seg = st.rep_of(hp[i], hp[i + 1]);
            lifted.insert(lifted.end(), seg.begin() + 1, seg.end());
        }
        // interiors join the branch set of the lower-index end; the final
        // edge of the lifted path connects the two sets
        const int i = kK4Pairs[e].first;
        for (std::size_t t = 1; t + 1 < lifted.size(); ++t)
            cert.branch_sets[i].push_back(lifted[t]);
        cert.edges[e] = {lifted[lifted.size() - 2], lifted.back()};
    }
    for (auto& bs : cert.branch_sets) bs = sorted_unique(std::move(bs));
    res.certificate = cert;
    return res;
}

bool validate_k4_minor(const Graph& g, const K4MinorCertificate& cert) {
    std::set<int> seen;
    for (const auto& bs : cert.branch_sets) {
        if (bs.empty()) return false;
        for (int v : bs) {
            if (v < 0 || v >= g.n) return false;
            if (!seen.insert(v).second) return false;
        }
        if (!is_connected(induced_subgraph(g, bs))) return false;
    }
    for (int e = 0; e < 6; ++e) {
        auto [u, v] = cert.edges[e];
        if (!g.has_edge(u, v)) return false;
        const auto& bu = cert.branch_sets[kK4Pairs[e].first];
        const auto& bv = cert.branch_sets[kK4Pairs[e].second];
        bool fwd = contains(bu, u) && contains(bv, v);
        bool bwd = contains(bu, v) && contains(bv, u);
        if (!fwd && !bwd) return false;
    }
    return true;
}

bool validate_sp_reduction(const Graph& g, const std::vector<SpReductionOp>& ops) {
    std::vector<std::set<int>> adj(g.n);
    std::vector<char> alive(g.n, 1);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) adj[v].insert(u);
    int remaining = g.n;
    for (const auto& op : ops) {
        if (op.v < 0 || op.v >= g.n || !alive[op.v]) return false;
        switch (op.kind) {
            case SpReductionOp::Kind::delete_isolated:
                if (!adj[op.v].empty()) return false;
                break;
            case SpReductionOp::Kind::delete_leaf:
                if (adj[op.v].size() != 1 || !adj[op.v].count(op.u)) return false;
                adj[op.u].erase(op.v);
                break;
            case SpReductionOp::Kind::suppress:
            case SpReductionOp::Kind::suppress_merge: {
                if (adj[op.v].size() != 2) return false;
                if (!adj[op.v].count(op.u) || !adj[op.v].count(op.w)) return false;
                bool merged = adj[op.u].count(op.w) > 0;
                if (merged != (op.kind == SpReductionOp::Kind::suppress_merge)) return false;
                adj[op.u].erase(op.v);
                adj[op.w].erase(op.v);
                if (!merged) {
                    adj[op.u].insert(op.w);
                    adj[op.w].insert(op.u);
                }
                break;
            }
        }
        alive[op.v] = 0;
        adj[op.v].clear();
        --remaining;
    }
    return remaining == 0;
}

// ---------------------------------------------------------------------------

std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_parts(const Graph& g) {
    if (g.edge_count() == 0) return std::make_pair(all_vertices(g.n), VertexSet{});
    if (!is_connected(g)) return std::nullopt;
    auto parts = two_coloring(g);
    if (!parts) return std::nullopt;
    const auto& [a, b] = *parts;
    if (static_cast<long long>(g.edge_count()) !=
        static_cast<long long>(a.size()) * static_cast<long long>(b.size()))
        return std::nullopt;
    return parts;
}

// ---------------------------------------------------------------------------
// linkage

bool is_linked(const Graph& g, const LinkageWitness& w) {
    const auto& hole = w.hole;
    if (!is_induced_cycle(g, hole) || hole.size() < 4) return false;
    if (w.v < 0 || w.v >= g.n || contains(sorted_unique(hole), w.v)) return false;
    VertexSet hole_set = sorted_unique(hole);

    std::array<int, 3> ends{};
    for (int i = 0; i < 3; ++i) {
        const Path& p = w.paths[i];
        if (p.size() < 2 || p.front() != w.v) return false;
        if (!is_induced_path(g, p)) return false;
        ends[i] = p.back();
        if (!contains(hole_set, ends[i])) return false;
        // interior and v stay off the hole; interior vertices touch the hole
        // only through the final path edge
        for (std::size_t t = 0; t + 1 < p.size(); ++t) {
            if (contains(hole_set, p[t])) return false;
            if (t == 0) continue;  // v's hole neighbors are covered below
            for (int c : hole_set)
                if (g.has_edge(p[t], c) && !(t + 2 == p.size() && c == ends[i])) return false;
        }
    }
    // pairwise: meet only at v; cross edges only at v or between endpoints
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const Path& pi = w.paths[i];
            const Path& pj = w.paths[j];
            for (std::size_t s = 1; s < pi.size(); ++s)
                for (std::size_t t = 1; t < pj.size(); ++t) {
                    if (pi[s] == pj[t]) return false;
                    if (g.has_edge(pi[s], pj[t]) &&
                        !(contains(hole_set, pi[s]) && contains(hole_set, pj[t])))
                        return false;
                }
        }
    }
    // every hole neighbor of v is a path endpoint
    for (int c : g.adj[w.v]) {
        if (!contains(hole_set, c)) continue;
        if (c != ends[0] && c != ends[1] && c != ends[2]) return false;
    }
    return true;
}

namespace {

// Attachment paths from v to the hole: [v, u1..uk, c] where the interior
// avoids the hole, inner vertices have no hole neighbors, and the last
// interior vertex touches the hole only at c.
void collect_attachment_paths(const Graph& g, int v, const VertexSet& hole_set,
                              long long& budget, bool& exhausted,
                              std::vector<Path>& out) {
    for (int c : g.adj[v])
        if (contains(hole_set, c)) out.push_back({v, c});

    std::vector<char> on_path(g.n, 0);
    on_path[v] = 1;
    Path p{v};
    auto dfs = [&](auto&& self, int last) -> void {
        if (exhausted) return;
        for (int w : g.adj[last]) {
            if (--budget < 0) {
                exhausted = true;
                return;
            }
            if (on_path[w] || contains(hole_set, w)) continue;
            // keep the path induced
            bool chord = false;
            for (std::size_t t = 0; t + 1 < p.size(); ++t)
                if (g.has_edge(w, p[t])) chord = true;
            if (chord) continue;
            int hole_nbrs = 0, hole_end = -1;
            for (int c : g.adj[w])
                if (contains(hole_set, c)) {
                    ++hole_nbrs;
                    hole_end = c;
                }
            p.push_back(w);
            on_path[w] = 1;
            if (hole_nbrs == 1) {
                Path full = p;
                full.push_back(hole_end);
                out.push_back(std::move(full));
            }
            if (hole_nbrs == 0) self(self, w);
            on_path[w] = 0;
            p.pop_back();
        }
    };
    dfs(dfs, v);
    std::sort(out.begin(), out.end());
}

}  // namespace

LinkageResult find_linkage(const Graph& g, int v, const std::vector<int>& hole,
                           long long budget) {
    if (!is_induced_cycle(g, hole) || hole.size() < 4)
        throw std::invalid_argument("find_linkage: not a hole of length >= 4");
    if (v < 0 || v >= g.n || contains(sorted_unique(hole), v))
        throw std::invalid_argument("find_linkage: vertex must lie off the hole");

    VertexSet hole_set = sorted_unique(hole);
    LinkageResult res{SearchStatus::absent, std::nullopt, 0};
    std::vector<Path> cand;
    bool exhausted = false;
    long long left = budget;
    collect_attachment_paths(g, v, hole_set, left, exhausted, cand);
    if (exhausted) {
        res.status = SearchStatus::inconclusive;
        res.expansions = budget - left;
        return res;
    }

    const int m = static_cast<int>(cand.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                if (--left < 0) {
                    res.status = SearchStatus::inconclusive;
                    res.expansions = budget - left;
                    return res;
                }
                LinkageWitness w{v, canonical_cycle(hole), {cand[i], cand[j], cand[k]}};
                if (is_linked(g, w)) {
                    res.status = SearchStatus::found;
                    res.witness = std::move(w);
                    res.expansions = budget - left;
                    return res;
                }
            }
    res.expansions = budget - left;
    return res;
}

ClassReport class_membership(const Graph& g, int exact_bound, long long budget) {
    ClassReport report;
    report.exact = g.n <= std::min(exact_bound, kMaxExactBound);
    report.triangle = find_triangle(g);
    if (report.triangle) {
        report.verdict = ClassReport::Verdict::out_of_class;
        return report;
    }
    Isk4Result isk4 = find_isk4(g, exact_bound, budget);
    if (isk4.status == SearchStatus::found) {
        report.verdict = ClassReport::Verdict::out_of_class;
        report.isk4 = isk4.witness;
    } else if (isk4.status == SearchStatus::inconclusive) {
        report.verdict = ClassReport::Verdict::inconclusive;
    } else {
        report.verdict = ClassReport::Verdict::in_class;
    }
    return report;
}

}  // namespace isk4
