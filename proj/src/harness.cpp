#include "isk4/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "isk4/coloring.hpp"
#include "isk4/decompose.hpp"
#include "isk4/graph_io.hpp"
#include "isk4/json_out.hpp"
#include "isk4/recognizers.hpp"
#include "isk4/rng.hpp"
#include "isk4/sparse_cycles.hpp"
#include "isk4/wheels.hpp"

namespace isk4 {

// ---------------------------------------------------------------------------
// canonical forms and exhaustive enumeration

std::uint32_t canonical_bits(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("canonical_bits: order must be at most 8");
    const int n = g.n;
    bool adj[8][8] = {};
    for (int v = 0; v < n; ++v)
        for (int u : g.adj[v]) adj[v][u] = true;

    std::array<int, 8> perm{};
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint32_t best = 0xffffffffu;
    do {
        std::uint32_t bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits = (bits << 1) | (adj[perm[i]][perm[j]] ? 1u : 0u);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return n <= 1 ? 0 : best;
}

Graph graph_from_canonical_bits(int n, std::uint32_t bits) {
    std::vector<std::pair<int, int>> edges;
    int total = n * (n - 1) / 2;
    int t = total;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            --t;
            if ((bits >> t) & 1) edges.emplace_back(i, j);
        }
    return build_graph(n, edges);
}

std::vector<Graph> enumerate_all_graphs(int max_order) {
    if (max_order < 0 || max_order > 7)
        throw std::invalid_argument(
            "enumerate_all_graphs: order capped at 7; use an external graph6 corpus beyond");
    // grow order by order: every graph on n+1 vertices is some representative
    // on n vertices plus one new vertex attached to a subset
    std::vector<std::set<std::uint32_t>> reps(max_order + 1);
    if (max_order >= 0) reps[0].insert(0);
    for (int n = 0; n < max_order; ++n) {
        for (std::uint32_t code : reps[n]) {
            Graph base = graph_from_canonical_bits(n, code);
            for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
                auto edges = base.edges();
                for (int v = 0; v < n; ++v)
                    if ((sub >> v) & 1) edges.emplace_back(v, n);
                reps[n + 1].insert(canonical_bits(build_graph(n + 1, edges)));
            }
        }
    }
    std::vector<Graph> out;
    for (int n = 0; n <= max_order; ++n)
        for (std::uint32_t code : reps[n]) out.push_back(graph_from_canonical_bits(n, code));
    return out;
}

// ---------------------------------------------------------------------------
// generators

Graph gen_series_parallel(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_series_parallel: need at least two vertices");
    SplitMix64 rng(seed);
    int order = 2;
    std::vector<std::pair<int, int>> edges{{0, 1}};
    while (order < n) {
        const int v = order++;
        switch (rng.next_below(3)) {
            case 0: {  // subdivide an edge
                const std::size_t e = rng.next_below(edges.size());
                auto [a, b] = edges[e];
                edges.erase(edges.begin() + static_cast<long>(e));
                edges.emplace_back(a, v);
                edges.emplace_back(v, b);
                break;
            }
            case 1: {  // two-edge ear across an existing edge
                const std::size_t e = rng.next_below(edges.size());
                auto [a, b] = edges[e];
                edges.emplace_back(a, v);
                edges.emplace_back(v, b);
                break;
            }
            default: {  // pendant
                const int r = static_cast<int>(rng.next_below(order - 1));
                edges.emplace_back(r, v);
                break;
            }
        }
    }
    Graph g = build_graph(n, edges);
    if (!is_series_parallel(g).series_parallel)
        throw std::logic_error("gen_series_parallel: construction failed the reduction check");
    return g;
}

Graph gen_wheel(int spokes, const std::vector<int>& sector_interior_lengths) {
    if (spokes < 4) throw std::invalid_argument("gen_wheel: need at least four spokes");
    if (static_cast<int>(sector_interior_lengths.size()) != spokes)
        throw std::invalid_argument("gen_wheel: one interior length per sector");
    for (int len : sector_interior_lengths)
        if (len < 1)
            throw std::invalid_argument("gen_wheel: sector interiors must be non-empty");

    std::vector<std::pair<int, int>> edges;
    std::vector<int> spoke_ids;
    int rim = 0;
    for (int s = 0; s < spokes; ++s) {
        spoke_ids.push_back(rim);
        rim += 1 + sector_interior_lengths[s];
    }
    for (int v = 0; v < rim; ++v) edges.emplace_back(v, (v + 1) % rim);
    const int center = rim;
    for (int s : spoke_ids) edges.emplace_back(s, center);
    Graph g = build_graph(rim + 1, edges);

    ClassReport report = class_membership(g, kMaxExactBound);
    if (report.verdict != ClassReport::Verdict::in_class)
        throw std::invalid_argument("gen_wheel: parameters leave the class (triangle or ISK4)");
    return g;
}

Graph gen_k33_glued(const Graph& base) {
    std::vector<std::pair<int, int>> edges = base.edges();
    int next = base.n;
    for (int v = 0; v < base.n; ++v) {
        // fresh K3,3 with v identified with a vertex of its own copy:
        // opposite side q1,q2,q3 then v's co-side p2,p3
        const int q1 = next, q2 = next + 1, q3 = next + 2, p2 = next + 3, p3 = next + 4;
        next += 5;
        for (int q : {q1, q2, q3}) {
            edges.emplace_back(v, q);
            edges.emplace_back(p2, q);
            edges.emplace_back(p3, q);
        }
    }
    return build_graph(next, edges);
}

Graph gen_random(int n, double edge_probability, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(edge_probability)) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// ---------------------------------------------------------------------------
// corpora

std::string CorpusSpec::describe() const {
    std::ostringstream out;
    switch (source) {
        case Source::internal: out << "internal:" << max_order; break;
        case Source::file: out << "file:" << path; break;
        case Source::gen_sp: out << "gen-sp:" << count << ":" << seed << ":" << size; break;
        case Source::gen_random:
            out << "gen-random:" << count << ":" << seed << ":" << size << ":" << p;
            break;
    }
    if (filter_connected) out << "+connected";
    if (filter_triangle_free) out << "+triangle-free";
    if (filter_isk4_free) out << "+isk4-free";
    if (filter_k33_free) out << "+k33-free";
    return out.str();
}

CorpusSpec CorpusSpec::parse(const std::string& text) {
    CorpusSpec spec;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    const std::string& kind = parts[0];
    auto req = [&](std::size_t k) {
        if (parts.size() < k + 1)
            throw std::invalid_argument("corpus spec \"" + text + "\" is missing fields");
    };
    if (kind == "internal") {
        spec.source = Source::internal;
        spec.max_order = parts.size() > 1 ? std::stoi(parts[1]) : 7;
    } else if (kind == "file") {
        req(1);
        spec.source = Source::file;
        spec.path = parts[1];
    } else if (kind == "gen-sp") {
        req(2);
        spec.source = Source::gen_sp;
        spec.count = std::stoi(parts[1]);
        spec.seed = std::stoull(parts[2]);
        spec.size = parts.size() > 3 ? std::stoi(parts[3]) : 40;
    } else if (kind == "gen-random") {
        req(4);
        spec.source = Source::gen_random;
        spec.count = std::stoi(parts[1]);
        spec.seed = std::stoull(parts[2]);
        spec.size = std::stoi(parts[3]);
        spec.p = std::stod(parts[4]);
    } else {
        throw std::invalid_argument("unknown corpus kind \"" + kind + "\"");
    }
    return spec;
}

std::vector<Graph> load_corpus(const CorpusSpec& spec) {
    std::vector<Graph> graphs;
    switch (spec.source) {
        case CorpusSpec::Source::internal:
            graphs = enumerate_all_graphs(spec.max_order);
            break;
        case CorpusSpec::Source::file: {
            std::ifstream in(spec.path, std::ios::binary);
            if (!in) throw std::invalid_argument("cannot open corpus file " + spec.path);
            std::stringstream buf;
            buf << in.rdbuf();
            graphs = parse_graph6_lines(buf.str());
            break;
        }
        case CorpusSpec::Source::gen_sp:
            for (int i = 0; i < spec.count; ++i) {
                int n = 5 + i % std::max(1, spec.size - 4);
                graphs.push_back(gen_series_parallel(n, spec.seed + static_cast<unsigned>(i)));
            }
            break;
        case CorpusSpec::Source::gen_random:
            for (int i = 0; i < spec.count; ++i)
                graphs.push_back(
                    gen_random(spec.size, spec.p, spec.seed + static_cast<unsigned>(i)));
            break;
    }
    std::vector<Graph> out;
    for (Graph& g : graphs) {
        if (spec.filter_connected && !is_connected(g)) continue;
        if (spec.filter_triangle_free && find_triangle(g)) continue;
        if (spec.filter_isk4_free &&
            find_isk4(g, kMaxExactBound).status != SearchStatus::absent)
            continue;
        if (spec.filter_k33_free && find_k33_subgraph(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// suites

namespace {

struct InstanceResult {
    enum class Outcome { pass, fail, skip, inconclusive };
    Outcome outcome = Outcome::pass;
    std::string certificate;
};

using SuiteFn = std::function<InstanceResult(const Graph&)>;

InstanceResult pass() { return {}; }
InstanceResult skip() { return {InstanceResult::Outcome::skip, {}}; }
InstanceResult inconclusive() { return {InstanceResult::Outcome::inconclusive, {}}; }
InstanceResult fail(const json& certificate) {
    return {InstanceResult::Outcome::fail, certificate.dump()};
}

bool in_class_exact(const Graph& g) {
    ClassReport r = class_membership(g, kMaxExactBound);
    return r.verdict == ClassReport::Verdict::in_class;
}

bool has_wheel(const Graph& g) { return find_wheel(g).wheel.has_value(); }

// Lemma nolink: no vertex of an in-class graph links to any hole.
InstanceResult suite_nolink(const Graph& g) {
    if (!in_class_exact(g)) return skip();
    HoleEnumeration holes = enumerate_holes(g);
    if (holes.overflow) return inconclusive();
    for (const auto& hole : holes.cycles) {
        VertexSet hs = sorted_unique(hole);
        for (int v = 0; v < g.n; ++v) {
            if (contains(hs, v)) continue;
            LinkageResult res = find_linkage(g, v, hole);
            if (res.status == SearchStatus::inconclusive) return inconclusive();
            if (res.status == SearchStatus::found)
                return fail(json{{"lemma", "nolink"}, {"linkage", to_json(*res.witness)}});
        }
    }
    return pass();
}

// Lemma proper: each minimum-rim wheel of an in-class graph is proper.
InstanceResult suite_proper_exists(const Graph& g) {
    if (!in_class_exact(g)) return skip();
    WheelSearchResult min_rim = find_wheel(g);
    if (min_rim.inconclusive) return inconclusive();
    if (!min_rim.wheel) return skip();
    const std::size_t len = min_rim.wheel->rim.size();
    HoleEnumeration holes = enumerate_holes(g);
    for (const auto& rim : holes.cycles) {
        if (rim.size() != len) continue;
        VertexSet rs = sorted_unique(rim);
        for (int x = 0; x < g.n; ++x) {
            if (contains(rs, x)) continue;
            int nbrs = 0;
            for (int v : rim)
                if (g.has_edge(x, v)) ++nbrs;
            if (nbrs < 3) continue;
            Wheel w = make_wheel(g, rim, x);
            ProperWheelReport rep = is_proper_wheel(g, w);
            if (!rep.proper)
                return fail(json{{"lemma", "proper"},
                                 {"wheel", to_json(w)},
                                 {"violator", rep.violator},
                                 {"bullet", rep.bullet}});
        }
    }
    return pass();
}

bool wheel_hypotheses(const Graph& g) {
    return in_class_exact(g) && !find_k33_subgraph(g);
}

InstanceResult suite_wheelmain(const Graph& g) {
    if (!wheel_hypotheses(g)) return skip();
    for (int x = 0; x < g.n; ++x) {
        for (const Wheel& w : all_min_spoke_proper_wheels(g, x)) {
            WheelmainReport rep = verify_wheelmain(g, w);
            if (!rep.pass)
                return fail(json{{"theorem", "wheelmain"},
                                 {"wheel", to_json(w)},
                                 {"detail", rep.detail},
                                 {"component", rep.component},
                                 {"sectors", rep.sectors}});
        }
    }
    return pass();
}

// All induced paths avoiding `forbidden`, up to max_vertices, first < last.
std::vector<Path> induced_paths_avoiding(const Graph& g, const VertexSet& forbidden,
                                         int max_vertices) {
    std::vector<Path> out;
    std::vector<char> banned(g.n, 0), on_path(g.n, 0);
    for (int v : forbidden) banned[v] = 1;
    Path p;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(p.size()) >= max_vertices) return;
        const int last = p.back();
        for (int w : g.adj[last]) {
            if (banned[w] || on_path[w]) continue;
            bool chord = false;
            for (std::size_t t = 0; t + 1 < p.size(); ++t)
                if (g.has_edge(w, p[t])) chord = true;
            if (chord) continue;
            p.push_back(w);
            on_path[w] = 1;
            if (p.front() < p.back()) out.push_back(p);
            self(self);
            on_path[w] = 0;
            p.pop_back();
        }
    };
    for (int v = 0; v < g.n; ++v) {
        if (banned[v]) continue;
        out.push_back({v});
        p.assign(1, v);
        on_path[v] = 1;
        dfs(dfs);
        on_path[v] = 0;
    }
    return out;
}

InstanceResult suite_paths(const Graph& g) {
    if (!wheel_hypotheses(g)) return skip();
    for (int x = 0; x < g.n; ++x) {
        for (const Wheel& w : all_min_spoke_proper_wheels(g, x)) {
            VertexSet ws = w.vertex_set();
            for (const Path& p : induced_paths_avoiding(g, ws, 6)) {
                int center_nbrs = 0;
                for (int v : p)
                    if (g.has_edge(x, v)) ++center_nbrs;
                if (center_nbrs > 1) continue;
                if (!verify_path_theorem(g, w, p))
                    return fail(json{{"theorem", "paths"},
                                     {"wheel", to_json(w)},
                                     {"path", p}});
            }
        }
    }
    return pass();
}

InstanceResult suite_v2_trichotomy(const Graph& g) {
    if (!in_class_exact(g)) return skip();
    DecompositionStep step = decomposition_step(g, kMaxExactBound);
    if (step.kind == DecompositionStep::Kind::inconclusive) return inconclusive();
    if (step.kind == DecompositionStep::Kind::not_in_class)
        return fail(json{{"theorem", "v2"}, {"step", to_json(step)}});
    return pass();
}

InstanceResult suite_3color(const Graph& g) {
    if (!in_class_exact(g)) return skip();
    ColorResult res = three_color(g, kMaxExactBound);
    if (res.status == ColorResult::Status::inconclusive) return inconclusive();
    if (res.status != ColorResult::Status::success)
        return fail(json{{"theorem", "3color"}, {"result", to_json(res)}});
    if (!verify_coloring(g, res.coloring).ok)
        return fail(json{{"theorem", "3color"}, {"reason", "improper coloring"}});
    auto chi = chromatic_oracle(g, 4);
    if (!chi || *chi > 3)
        return fail(json{{"theorem", "3color"}, {"reason", "oracle chromatic number above 3"}});
    return pass();
}

InstanceResult suite_duffin(const Graph& g) {
    if (!is_series_parallel(g).series_parallel) return skip();
    Isk4Result isk4 = find_isk4(g, kDefaultExactBound);
    if (isk4.status == SearchStatus::inconclusive) return inconclusive();
    if (isk4.status == SearchStatus::found)
        return fail(json{{"theorem", "duffin"}, {"isk4", to_json(*isk4.witness)}});
    WheelSearchResult wheel = find_wheel(g);
    if (wheel.inconclusive) return inconclusive();
    if (wheel.wheel)
        return fail(json{{"theorem", "duffin"}, {"wheel", to_json(*wheel.wheel)}});
    if (auto k33 = find_k33_subgraph(g))
        return fail(json{{"theorem", "duffin"}, {"k33", to_json(*k33)}});
    if (g.n > 0) {
        int min_deg = g.n;
        for (int v = 0; v < g.n; ++v) min_deg = std::min(min_deg, g.degree(v));
        if (min_deg > 2)
            return fail(json{{"theorem", "duffin"}, {"reason", "minimum degree above two"}});
    }
    return pass();
}

InstanceResult suite_levesque(const Graph& g) {
    if (!in_class_exact(g)) return skip();
    if (is_series_parallel(g).series_parallel) return pass();
    if (find_k33_subgraph(g)) return pass();
    if (has_wheel(g)) return pass();
    return fail(json{{"theorem", "levesque-trichotomy"},
                     {"reason", "neither series-parallel nor K33 nor wheel"}});
}

InstanceResult suite_todo(const Graph& g) {
    if (!in_class_exact(g) || !find_k33_subgraph(g)) return skip();
    if (complete_bipartite_parts(g)) return pass();
    if (find_clique_cutset(g)) return pass();
    return fail(json{{"theorem", "todo"},
                     {"reason", "K33-containing graph with neither outcome"}});
}

InstanceResult suite_main_noncenter(const Graph& g) {
    if (!wheel_hypotheses(g)) return skip();
    if (is_series_parallel(g).series_parallel) return skip();
    std::vector<char> center(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        CenterResult r = is_proper_wheel_center(g, v);
        if (r.inconclusive) return inconclusive();
        center[v] = r.is_center;
    }
    auto check_pair = [&](int x, int y) -> bool {
        VertexSet shield = closed_neighborhood(g, x);
        if (y != x) shield = set_union(shield, closed_neighborhood(g, y));
        for (int v : complement_set(g.n, shield))
            if (g.degree(v) <= 2) return true;
        return false;
    };
    for (int x = 0; x < g.n; ++x) {
        if (center[x]) continue;
        if (!check_pair(x, x))
            return fail(json{{"theorem", "main"}, {"x", x}, {"y", x}});
        for (int y : g.adj[x]) {
            if (y < x || center[y]) continue;
            if (!check_pair(x, y))
                return fail(json{{"theorem", "main"}, {"x", x}, {"y", y}});
        }
    }
    return pass();
}

InstanceResult suite_starcut(const Graph& g) {
    if (!wheel_hypotheses(g)) return skip();
    for (int s = 0; s < g.n; ++s) {
        VertexSet rest = complement_set(g.n, closed_neighborhood(g, s));
        Graph outside = induced_subgraph(g, rest);
        for (const VertexSet& comp_new : components(outside)) {
            VertexSet comp;
            for (int i : comp_new) comp.push_back(rest[i]);
            StarSubgraph star = star_component_subgraph(g, s, comp);
            CenterResult rs = is_proper_wheel_center(star.h, star.s_index);
            if (rs.inconclusive) return inconclusive();
            if (rs.is_center)
                return fail(json{{"lemma", "starcutset"},
                                 {"s", s},
                                 {"component", comp},
                                 {"reason", "s is a proper wheel center in H"}});
            for (int v = 0; v < star.h.n; ++v) {
                if (v == star.s_index) continue;
                CenterResult rh = is_proper_wheel_center(star.h, v);
                if (rh.inconclusive) return inconclusive();
                if (!rh.is_center) continue;
                CenterResult rg = is_proper_wheel_center(g, star.to_parent[v]);
                if (rg.inconclusive) return inconclusive();
                if (!rg.is_center)
                    return fail(json{{"lemma", "starcutset"},
                                     {"s", s},
                                     {"component", comp},
                                     {"vertex", star.to_parent[v]},
                                     {"reason", "center in H but not in G"}});
            }
        }
    }
    return pass();
}

// Shared scaffolding for the contraction lemmas: for each proper-wheel
// center s and component K of G \ N[s] with G|(K ∪ N ∪ {s}) series-parallel,
// visit the contraction G' of K.
template <typename F>
InstanceResult for_each_contraction(const Graph& g, F&& visit) {
    for (int s = 0; s < g.n; ++s) {
        CenterResult cs = is_proper_wheel_center(g, s);
        if (cs.inconclusive) return inconclusive();
        if (!cs.is_center) continue;
        VertexSet rest = complement_set(g.n, closed_neighborhood(g, s));
        Graph outside = induced_subgraph(g, rest);
        for (const VertexSet& comp_new : components(outside)) {
            VertexSet comp;
            for (int i : comp_new) comp.push_back(rest[i]);
            StarSubgraph star = star_component_subgraph(g, s, comp);
            if (!is_series_parallel(star.h).series_parallel) continue;
            Graph contracted = contract_component(g, comp, "z");
            // vertex map: kept vertices in ascending order, then z
            std::vector<int> old_of;
            for (int v = 0; v < g.n; ++v)
                if (!contains(comp, v)) old_of.push_back(v);
            InstanceResult r = visit(s, comp, contracted, old_of);
            if (r.outcome != InstanceResult::Outcome::pass) return r;
        }
    }
    return pass();
}

InstanceResult suite_contract(const Graph& g) {
    if (!wheel_hypotheses(g)) return skip();
    return for_each_contraction(g, [&](int s, const VertexSet& comp, const Graph& contracted,
                                       const std::vector<int>&) -> InstanceResult {
        ClassReport report = class_membership(contracted, kMaxExactBound);
        if (report.verdict == ClassReport::Verdict::inconclusive) return inconclusive();
        if (report.verdict != ClassReport::Verdict::in_class)
            return fail(json{{"lemma", "contract"},
                             {"s", s},
                             {"component", comp},
                             {"reason", "contraction left the class"}});
        if (find_k33_subgraph(contracted))
            return fail(json{{"lemma", "contract"},
                             {"s", s},
                             {"component", comp},
                             {"reason", "contraction gained a K33"}});
        return pass();
    });
}

InstanceResult suite_noncenters(const Graph& g) {
    if (!wheel_hypotheses(g)) return skip();
    return for_each_contraction(g, [&](int s, const VertexSet& comp, const Graph& contracted,
                                       const std::vector<int>& old_of) -> InstanceResult {
        const int z = contracted.n - 1;
        CenterResult rz = is_proper_wheel_center(contracted, z);
        if (rz.inconclusive) return inconclusive();
        if (rz.is_center)
            return fail(json{{"lemma", "non-centers"},
                             {"s", s},
                             {"component", comp},
                             {"reason", "z is a proper wheel center"}});
        for (int v = 0; v < z; ++v) {
            if (old_of[v] == s) continue;
            CenterResult rc = is_proper_wheel_center(contracted, v);
            if (rc.inconclusive) return inconclusive();
            if (!rc.is_center) continue;
            CenterResult rg = is_proper_wheel_center(g, old_of[v]);
            if (rg.inconclusive) return inconclusive();
            if (!rg.is_center)
                return fail(json{{"lemma", "non-centers"},
                                 {"s", s},
                                 {"component", comp},
                                 {"vertex", old_of[v]},
                                 {"reason", "center in G' but not in G"}});
        }
        return pass();
    });
}

// Statement-level check of the almost-proper wheel lemmas: any 1-almost
// (2-almost) configuration admits a proper wheel with the same center and
// the same (at most the same) spoke count.
InstanceResult suite_almost_proper(const Graph& g) {
    if (!in_class_exact(g)) return skip();
    HoleEnumeration holes = enumerate_holes(g);
    if (holes.overflow) return inconclusive();

    // spoke counts of all proper wheels, per center
    std::vector<std::set<int>> proper_spokes(g.n);
    auto each_wheel = [&](auto&& visit) {
        for (const auto& rim : holes.cycles) {
            VertexSet rs = sorted_unique(rim);
            for (int x = 0; x < g.n; ++x) {
                if (contains(rs, x)) continue;
                int nbrs = 0;
                for (int v : rim)
                    if (g.has_edge(x, v)) ++nbrs;
                if (nbrs >= 3) visit(make_wheel(g, rim, x));
            }
        }
    };
    each_wheel([&](const Wheel& w) {
        if (is_proper_wheel(g, w).proper) proper_spokes[w.center].insert(w.spoke_count());
    });

    InstanceResult verdict = pass();
    each_wheel([&](const Wheel& w) {
        if (verdict.outcome != InstanceResult::Outcome::pass) return;
        VertexSet ws = w.vertex_set();
        VertexSet violators;
        for (int v = 0; v < g.n; ++v)
            if (!contains(ws, v) && !proper_for(g, w, v)) violators.push_back(v);
        if (violators.empty()) return;  // already proper
        const int k = w.spoke_count();
        const std::set<int>& counts = proper_spokes[w.center];
        for (int i = 0; i < k; ++i) {
            if (is_k_almost_proper(g, w, {w.spokes[i]}, violators) && !counts.count(k)) {
                verdict = fail(json{{"lemma", "one-almost"},
                                    {"wheel", to_json(w)},
                                    {"marked", w.spokes[i]}});
                return;
            }
            for (int j = i + 1; j < k; ++j) {
                VertexSet marked{w.spokes[i], w.spokes[j]};
                if (!is_k_almost_proper(g, w, marked, violators)) continue;
                bool some_at_most_k = !counts.empty() && *counts.begin() <= k;
                if (!some_at_most_k) {
                    verdict = fail(json{{"lemma", "two-almost"},
                                        {"wheel", to_json(w)},
                                        {"marked", marked}});
                    return;
                }
            }
        }
    });
    return verdict;
}

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table{
        {"nolink", suite_nolink},
        {"proper-exists", suite_proper_exists},
        {"wheelmain", suite_wheelmain},
        {"paths", suite_paths},
        {"v2-trichotomy", suite_v2_trichotomy},
        {"3color", suite_3color},
        {"duffin", suite_duffin},
        {"levesque-trichotomy", suite_levesque},
        {"todo", suite_todo},
        {"main-noncenter", suite_main_noncenter},
        {"starcut", suite_starcut},
        {"contract", suite_contract},
        {"noncenters", suite_noncenters},
        {"almost-proper", suite_almost_proper},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

SuiteReport run_suite(const std::string& suite, const CorpusSpec& corpus, int jobs,
                      bool progress) {
    auto it = suite_table().find(suite);
    if (it == suite_table().end())
        throw std::invalid_argument("unknown suite \"" + suite + "\"");
    const SuiteFn& fn = it->second;

    const auto start = std::chrono::steady_clock::now();
    std::vector<Graph> graphs = load_corpus(corpus);
    std::vector<InstanceResult> results(graphs.size());

    const int workers = std::max(1, jobs);
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> done{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) break;
            results[i] = fn(graphs[i]);
            std::size_t d = ++done;
            if (progress && d % 100 == 0)
                std::fprintf(stderr, "# %zu/%zu instances\n", d, graphs.size());
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    SuiteReport report;
    report.suite = suite;
    report.corpus = corpus.describe();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        switch (results[i].outcome) {
            case InstanceResult::Outcome::pass: ++report.checked; break;
            case InstanceResult::Outcome::skip: ++report.skipped; break;
            case InstanceResult::Outcome::inconclusive:
                ++report.checked;
                ++report.inconclusive;
                break;
            case InstanceResult::Outcome::fail:
                ++report.checked;
                report.failures.push_back({emit_graph6(graphs[i]), results[i].certificate});
                break;
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

std::string SuiteReport::canonical_text() const {
    std::ostringstream out;
    out << "suite " << suite << "\n";
    out << "corpus " << corpus << "\n";
    out << "checked " << checked << "\n";
    out << "skipped " << skipped << "\n";
    out << "inconclusive " << inconclusive << "\n";
    out << "failures " << failures.size() << "\n";
    for (const auto& f : failures) out << "fail " << f.graph6 << " " << f.certificate << "\n";
    out << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string SuiteReport::canonical_json() const {
    json j{{"suite", suite},
           {"corpus", corpus},
           {"checked", checked},
           {"skipped", skipped},
           {"inconclusive", inconclusive},
           {"pass", pass()}};
    j["failures"] = json::array();
    for (const auto& f : failures) {
        json cert = f.certificate.empty() ? json() : json::parse(f.certificate);
        j["failures"].push_back(json{{"graph6", f.graph6}, {"certificate", cert}});
    }
    return j.dump(2) + "\n";
}

}  // namespace isk4
