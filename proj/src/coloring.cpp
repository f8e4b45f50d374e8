#include "isk4/coloring.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "isk4/decompose.hpp"

namespace isk4 {

ColoringCheck verify_coloring(const Graph& g, const Coloring& c) {
    ColoringCheck check;
    if (static_cast<int>(c.size()) != g.n) {
        check.ok = false;
        check.offending_vertex = static_cast<int>(c.size());
        return check;
    }
    for (int v = 0; v < g.n; ++v) {
        if (c[v] < 0 || c[v] > 2) {
            check.ok = false;
            check.offending_vertex = v;
            return check;
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            check.ok = false;
            check.mono_edge = {u, v};
            return check;
        }
    }
    return check;
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

struct ColorCtx {
    int exact_bound;
    long long budget;
    std::unordered_map<std::string, Coloring> memo;
    bool refused = false;
    bool inconclusive = false;
    std::optional<Triangle> triangle;  // in root indices
    std::optional<Isk4Witness> isk4;   // in root indices

    void refuse(const DecompositionStep& step, const std::vector<int>& to_root) {
        refused = true;
        if (step.triangle) {
            Triangle t = *step.triangle;
            for (int& v : t.v) v = to_root[v];
            std::sort(t.v.begin(), t.v.end());
            triangle = t;
        }
        if (step.isk4) {
            Isk4Witness w = *step.isk4;
            for (int& v : w.vertex_set) v = to_root[v];
            std::sort(w.vertex_set.begin(), w.vertex_set.end());
            for (int& v : w.branch) v = to_root[v];
            for (Path& p : w.paths)
                for (int& v : p) v = to_root[v];
            // branch stays aligned with the path system, so no re-sort
            isk4 = w;
        }
    }
};

Coloring color_rec(ColorCtx& ctx, const Graph& g, const std::vector<int>& to_root) {
    if (ctx.refused || ctx.inconclusive) return {};
    if (g.n <= 3) {
        Coloring c(g.n);
        for (int v = 0; v < g.n; ++v) c[v] = v;
        return c;
    }
    std::string key = adjacency_key(g);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    DecompositionStep step = decomposition_step(g, ctx.exact_bound, ctx.budget);
    Coloring result;
    switch (step.kind) {
        case DecompositionStep::Kind::low_degree_vertex: {
            const int v = step.vertex;
            VertexSet keep = complement_set(g.n, {v});
            std::vector<int> child_root(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i) child_root[i] = to_root[keep[i]];
            Coloring sub = color_rec(ctx, induced_subgraph(g, keep), child_root);
            if (ctx.refused || ctx.inconclusive) return {};
            result.assign(g.n, -1);
            for (std::size_t i = 0; i < keep.size(); ++i) result[keep[i]] = sub[i];
            bool used[3] = {false, false, false};
            for (int u : g.adj[v]) used[result[u]] = true;
            for (int c = 0; c < 3; ++c)
                if (!used[c]) {
                    result[v] = c;
                    break;
                }
            break;
        }
        case DecompositionStep::Kind::complete_bipartite: {
            result.assign(g.n, 0);
            for (int v : step.part_b) result[v] = 1;
            break;
        }
        case DecompositionStep::Kind::clique_cutset: {
            const CliqueCutset& cut = *step.cut;
            VertexSet keep_a = set_union(cut.side_a, cut.cutset);
            VertexSet keep_b = set_union(cut.side_b, cut.cutset);
            std::vector<int> root_a(keep_a.size()), root_b(keep_b.size());
            for (std::size_t i = 0; i < keep_a.size(); ++i) root_a[i] = to_root[keep_a[i]];
            for (std::size_t i = 0; i < keep_b.size(); ++i) root_b[i] = to_root[keep_b[i]];
            Coloring ca = color_rec(ctx, induced_subgraph(g, keep_a), root_a);
            if (ctx.refused || ctx.inconclusive) return {};
            Coloring cb = color_rec(ctx, induced_subgraph(g, keep_b), root_b);
            if (ctx.refused || ctx.inconclusive) return {};

            // least permutation of {0,1,2} aligning the cutset colors
            auto pos_in = [](const VertexSet& xs, int v) {
                return static_cast<int>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
            };
            const std::array<int, 3>* perm = nullptr;
            for (const auto& p : kPerms) {
                bool ok = true;
                for (int v : cut.cutset)
                    if (p[cb[pos_in(keep_b, v)]] != ca[pos_in(keep_a, v)]) ok = false;
                if (ok) {
                    perm = &p;
                    break;
                }
            }
            if (!perm) throw std::logic_error("three_color: no aligning permutation");
            result.assign(g.n, -1);
            for (std::size_t i = 0; i < keep_a.size(); ++i) result[keep_a[i]] = ca[i];
            for (std::size_t i = 0; i < keep_b.size(); ++i) {
                int v = keep_b[i];
                if (!contains(cut.cutset, v)) result[v] = (*perm)[cb[i]];
            }
            break;
        }
        case DecompositionStep::Kind::not_in_class:
            ctx.refuse(step, to_root);
            return {};
        case DecompositionStep::Kind::inconclusive:
            ctx.inconclusive = true;
            return {};
    }
    ctx.memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

ColorResult three_color(const Graph& g, int exact_bound, long long budget) {
    ColorCtx ctx{exact_bound, budget, {}, false, false, std::nullopt, std::nullopt};
    std::vector<int> identity(g.n);
    for (int v = 0; v < g.n; ++v) identity[v] = v;
    Coloring c = color_rec(ctx, g, identity);
    ColorResult res;
    if (ctx.refused) {
        res.status = ColorResult::Status::refused;
        res.triangle = ctx.triangle;
        res.isk4 = ctx.isk4;
        return res;
    }
    if (ctx.inconclusive) {
        res.status = ColorResult::Status::inconclusive;
        return res;
    }
    res.status = ColorResult::Status::success;
    res.coloring = std::move(c);
    if (!verify_coloring(g, res.coloring).ok)
        throw std::logic_error("three_color: produced an improper coloring");
    return res;
}

std::optional<int> chromatic_oracle(const Graph& g, int k_max) {
    if (k_max < 0 || k_max > 4)
        throw std::invalid_argument("chromatic_oracle: k_max must be between 0 and 4");
    if (g.n == 0) return 0;

    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> color(g.n, -1);
    auto feasible = [&](auto&& self, int idx, int k) -> bool {
        if (idx == g.n) return true;
        const int v = order[idx];
        int max_used = -1;
        for (int i = 0; i < idx; ++i) max_used = std::max(max_used, color[order[i]]);
        const int limit = std::min(k - 1, max_used + 1);  // new colors in order
        for (int c = 0; c <= limit; ++c) {
            bool clash = false;
            for (int u : g.adj[v])
                if (color[u] == c) clash = true;
            if (clash) continue;
            color[v] = c;
            if (self(self, idx + 1, k)) return true;
            color[v] = -1;
        }
        return false;
    };
    for (int k = 1; k <= k_max; ++k) {
        std::fill(color.begin(), color.end(), -1);
        if (feasible(feasible, 0, k)) return k;
    }
    return std::nullopt;
}

}  // namespace isk4
