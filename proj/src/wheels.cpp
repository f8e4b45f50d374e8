#include "isk4/wheels.hpp"

#include <algorithm>
#include <stdexcept>

namespace isk4 {

VertexSet Wheel::vertex_set() const {
    VertexSet vs = rim;
    vs.push_back(center);
    return sorted_unique(std::move(vs));
}

Wheel make_wheel(const Graph& g, const std::vector<int>& rim, int center) {
    if (rim.size() < 4 || !is_induced_cycle(g, rim))
        throw std::invalid_argument("make_wheel: rim is not a hole");
    if (center < 0 || center >= g.n) throw std::invalid_argument("make_wheel: bad center");
    Wheel w;
    w.rim = canonical_cycle(rim);
    w.center = center;
    const int r = static_cast<int>(w.rim.size());
    std::vector<int> spoke_pos;
    for (int i = 0; i < r; ++i) {
        if (w.rim[i] == center) throw std::invalid_argument("make_wheel: center lies on the rim");
        if (g.has_edge(center, w.rim[i])) {
            spoke_pos.push_back(i);
            w.spokes.push_back(w.rim[i]);
        }
    }
    if (w.spokes.size() < 3)
        throw std::invalid_argument("make_wheel: center has fewer than three rim neighbors");
    std::sort(w.spokes.begin(), w.spokes.end());
    const int k = static_cast<int>(spoke_pos.size());
    for (int i = 0; i < k; ++i) {
        int from = spoke_pos[i];
        int to = spoke_pos[(i + 1) % k];
        Path sector{w.rim[from]};
        for (int t = (from + 1) % r; ; t = (t + 1) % r) {
            sector.push_back(w.rim[t]);
            if (t == to) break;
        }
        w.sectors.push_back(std::move(sector));
    }
    return w;
}

// ---------------------------------------------------------------------------
// induced cycle enumeration

HoleEnumeration enumerate_induced_cycles(const Graph& g, int min_len, long long max_count) {
    HoleEnumeration out;
    long long expansions = 0;
    const long long expansion_cap = std::max<long long>(50'000'000, 100 * max_count);

    std::vector<char> on_path(g.n, 0);
    std::vector<int> path;

    for (int m = 0; m < g.n && !out.overflow; ++m) {
        path.assign(1, m);
        on_path[m] = 1;
        auto dfs = [&](auto&& self) -> void {
            if (out.overflow) return;
            const int last = path.back();
            for (int w : g.adj[last]) {
                if (out.overflow) return;
                if (w <= m || on_path[w]) continue;
                if (++expansions > expansion_cap) {
                    out.overflow = true;
                    return;
                }
                // no chords to earlier path vertices (the start is handled
                // by the closure rule below)
                bool chord = false;
                for (std::size_t t = 1; t + 1 < path.size(); ++t)
                    if (g.has_edge(w, path[t])) chord = true;
                if (chord) continue;
                if (path.size() >= 2 && g.has_edge(w, m)) {
                    // closing edge; a longer cycle through w would be chorded
                    if (static_cast<int>(path.size()) + 1 >= min_len && path[1] < w) {
                        std::vector<int> cyc = path;
                        cyc.push_back(w);
                        out.cycles.push_back(std::move(cyc));
                        if (static_cast<long long>(out.cycles.size()) > max_count)
                            out.overflow = true;
                    }
                    continue;
                }
                path.push_back(w);
                on_path[w] = 1;
                self(self);
                on_path[w] = 0;
                path.pop_back();
            }
        };
        dfs(dfs);
        on_path[m] = 0;
    }
    if (out.overflow && static_cast<long long>(out.cycles.size()) > max_count)
        out.cycles.resize(max_count);
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return out;
}

HoleEnumeration enumerate_holes(const Graph& g, long long max_count) {
    return enumerate_induced_cycles(g, 4, max_count);
}

// ---------------------------------------------------------------------------
// wheel search

WheelSearchResult find_wheel(const Graph& g, long long hole_cap) {
    HoleEnumeration holes = enumerate_holes(g, hole_cap);
    for (const auto& rim : holes.cycles) {
        VertexSet rim_set = sorted_unique(rim);
        for (int x = 0; x < g.n; ++x) {
            if (contains(rim_set, x)) continue;
            int nbrs = 0;
            for (int v : rim)
                if (g.has_edge(x, v)) ++nbrs;
            if (nbrs >= 3) return {make_wheel(g, rim, x), false};
        }
    }
    return {std::nullopt, holes.overflow};
}

bool proper_for(const Graph& g, const Wheel& w, int v) {
    VertexSet rim_nbrs;
    for (int u : w.rim)
        if (g.has_edge(v, u)) rim_nbrs.push_back(u);
    if (rim_nbrs.empty()) return true;
    std::sort(rim_nbrs.begin(), rim_nbrs.end());
    bool in_one_sector = false;
    for (const auto& s : w.sectors) {
        VertexSet sv = sorted_unique(s);
        if (set_difference(rim_nbrs, sv).empty()) {
            in_one_sector = true;
            break;
        }
    }
    if (!in_one_sector) return false;
    if (rim_nbrs.size() >= 3 && !g.has_edge(v, w.center)) return false;
    return true;
}

ProperWheelReport is_proper_wheel(const Graph& g, const Wheel& w) {
    VertexSet wheel_set = w.vertex_set();
    for (int v = 0; v < g.n; ++v) {
        if (contains(wheel_set, v)) continue;
        VertexSet rim_nbrs;
        for (int u : w.rim)
            if (g.has_edge(v, u)) rim_nbrs.push_back(u);
        if (rim_nbrs.empty()) continue;
        std::sort(rim_nbrs.begin(), rim_nbrs.end());
        bool in_one_sector = false;
        for (const auto& s : w.sectors) {
            if (set_difference(rim_nbrs, sorted_unique(s)).empty()) {
                in_one_sector = true;
                break;
            }
        }
        if (!in_one_sector) return {false, v, 1};
        if (rim_nbrs.size() >= 3 && !g.has_edge(v, w.center)) return {false, v, 2};
    }
    return {true, -1, 0};
}

namespace {

// All wheels in (rim length, rim lex, center) order, passed to a visitor
// that may stop the scan.
template <typename F>
bool scan_wheels(const Graph& g, long long hole_cap, bool& overflow, F&& visit) {
    HoleEnumeration holes = enumerate_holes(g, hole_cap);
    overflow = holes.overflow;
    for (const auto& rim : holes.cycles) {
        VertexSet rim_set = sorted_unique(rim);
        for (int x = 0; x < g.n; ++x) {
            if (contains(rim_set, x)) continue;
            int nbrs = 0;
            for (int v : rim)
                if (g.has_edge(x, v)) ++nbrs;
            if (nbrs < 3) continue;
            if (!visit(make_wheel(g, rim, x))) return false;
        }
    }
    return true;
}

}  // namespace

FindProperWheelResult find_proper_wheel(const Graph& g, long long hole_cap) {
    WheelSearchResult min_rim = find_wheel(g, hole_cap);
    if (!min_rim.wheel) return {std::nullopt, false, min_rim.inconclusive};
    if (is_proper_wheel(g, *min_rim.wheel).proper) return {min_rim.wheel, false, false};
    // out-of-class graphs may need the full scan
    FindProperWheelResult res{std::nullopt, true, false};
    bool overflow = false;
    scan_wheels(g, hole_cap, overflow, [&](Wheel w) {
        if (is_proper_wheel(g, w).proper) {
            res.wheel = std::move(w);
            res.improper_only = false;
            return false;
        }
        return true;
    });
    res.inconclusive = overflow && !res.wheel;
    return res;
}

MinSpokeResult min_spoke_proper_wheel(const Graph& g, int center, long long hole_cap) {
    MinSpokeResult res;
    bool overflow = false;
    std::optional<Wheel> best;
    scan_wheels(g, hole_cap, overflow, [&](Wheel w) {
        if (w.center != center) return true;
        if (!is_proper_wheel(g, w).proper) return true;
        if (!best || w.spoke_count() < best->spoke_count())
            best = std::move(w);
        // scan order already breaks ties by (rim length, lex)
        return true;
    });
    res.wheel = best;
    res.inconclusive = overflow && !best;
    return res;
}

std::vector<Wheel> all_min_spoke_proper_wheels(const Graph& g, int center, long long hole_cap) {
    std::vector<Wheel> all;
    bool overflow = false;
    scan_wheels(g, hole_cap, overflow, [&](Wheel w) {
        if (w.center == center && is_proper_wheel(g, w).proper) all.push_back(std::move(w));
        return true;
    });
    int best = g.n + 1;
    for (const Wheel& w : all) best = std::min(best, w.spoke_count());
    std::vector<Wheel> out;
    for (Wheel& w : all)
        if (w.spoke_count() == best) out.push_back(std::move(w));
    return out;
}

CenterResult is_proper_wheel_center(const Graph& g, int v, long long hole_cap) {
    CenterResult res;
    bool overflow = false;
    bool completed = scan_wheels(g, hole_cap, overflow, [&](Wheel w) {
        if (w.center == v && is_proper_wheel(g, w).proper) {
            res.is_center = true;
            return false;
        }
        return true;
    });
    (void)completed;
    res.inconclusive = overflow && !res.is_center;
    return res;
}

// ---------------------------------------------------------------------------
// non-offensive vertices and almost-proper wheels

bool non_offensive_at(const Graph& g, const Wheel& w, int x, int spoke) {
    VertexSet wheel_set = w.vertex_set();
    if (contains(wheel_set, x))
        throw std::invalid_argument("non_offensive_at: x lies on the wheel");
    if (!contains(w.spokes, spoke)) return false;
    if (!g.has_edge(x, w.center)) return false;

    const int k = static_cast<int>(w.sectors.size());
    int right = -1;  // sector starting at `spoke`
    for (int i = 0; i < k; ++i)
        if (w.sectors[i].front() == spoke) right = i;
    if (right < 0) return false;
    const int left = (right + k - 1) % k;
    if (left == right) return false;
    VertexSet s1 = sorted_unique(w.sectors[left]);
    VertexSet s2 = sorted_unique(w.sectors[right]);
    VertexSet cover = set_union(s1, s2);

    VertexSet rim_set = sorted_unique(w.rim);
    auto rim_nbrs_of = [&](int u) {
        VertexSet nbrs;
        for (int t : g.adj[u])
            if (contains(rim_set, t)) nbrs.push_back(t);
        return nbrs;
    };
    VertexSet xn = rim_nbrs_of(x);
    if (set_intersection(xn, s1).empty() || set_intersection(xn, s2).empty()) return false;
    if (!set_difference(xn, cover).empty()) return false;
    for (int u : g.adj[x]) {
        if (u == x || contains(wheel_set, u)) continue;
        if (!set_difference(rim_nbrs_of(u), cover).empty()) return false;
    }
    return true;
}

std::optional<int> is_non_offensive(const Graph& g, const Wheel& w, int x) {
    for (const auto& s : w.sectors) {
        int spoke = s.front();
        if (non_offensive_at(g, w, x, spoke)) return spoke;
    }
    return std::nullopt;
}

bool is_k_almost_proper(const Graph& g, const Wheel& w, const VertexSet& marked_spokes,
                        const VertexSet& removed) {
    for (int m : marked_spokes)
        if (!contains(w.spokes, m))
            throw std::invalid_argument("is_k_almost_proper: marked vertex is not a spoke");
    VertexSet wheel_set = w.vertex_set();
    if (!set_intersection(removed, wheel_set).empty())
        throw std::invalid_argument("is_k_almost_proper: removed set meets the wheel");

    // marked spokes pairwise non-consecutive: no sector has two of them as ends
    for (const auto& s : w.sectors) {
        if (contains(marked_spokes, s.front()) && contains(marked_spokes, s.back()) &&
            s.front() != s.back())
            return false;
    }
    // proper in g minus removed
    for (int v = 0; v < g.n; ++v) {
        if (contains(wheel_set, v) || contains(removed, v)) continue;
        if (!proper_for(g, w, v)) return false;
    }
    // each removed vertex non-offensive at some marked spoke
    for (int x : removed) {
        bool ok = false;
        for (int m : marked_spokes)
            if (non_offensive_at(g, w, x, m)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// theorem checks

namespace {

// Re-derives spokes and sectors from the rim so that callers cannot hand in
// inconsistent fields, then checks the theorem's precondition.
Wheel require_min_spoke_proper(const Graph& g, const Wheel& given, const char* who) {
    Wheel w = make_wheel(g, given.rim, given.center);
    if (!is_proper_wheel(g, w).proper)
        throw std::invalid_argument(std::string(who) + ": wheel is not proper");
    MinSpokeResult best = min_spoke_proper_wheel(g, w.center);
    if (!best.wheel || best.wheel->spoke_count() < w.spoke_count())
        throw std::invalid_argument(std::string(who) +
                                    ": wheel does not have minimum spokes for its center");
    return w;
}

}  // namespace

WheelmainReport verify_wheelmain(const Graph& g, const Wheel& given) {
    Wheel w = require_min_spoke_proper(g, given, "verify_wheelmain");
    WheelmainReport report;
    const int x = w.center;

    std::vector<VertexSet> interiors;
    for (const auto& s : w.sectors) {
        Path inner(s.begin() + 1, s.end() - 1);
        interiors.push_back(sorted_unique(inner));
    }

    // (1) components of V(G) \ N(x) hold at most one sector interior
    VertexSet kept = complement_set(g.n, sorted_unique(g.adj[x]));
    Graph h = induced_subgraph(g, kept);
    for (const VertexSet& comp_new : components(h)) {
        VertexSet comp;
        for (int i : comp_new) comp.push_back(kept[i]);
        std::vector<int> inside;
        for (std::size_t s = 0; s < interiors.size(); ++s)
            if (!interiors[s].empty() && set_difference(interiors[s], comp).empty())
                inside.push_back(static_cast<int>(s));
        if (inside.size() > 1) {
            report.pass = false;
            report.detail = "component holds the interiors of two sectors";
            report.component = comp;
            report.sectors = inside;
            return report;
        }
    }

    // (2) per u in N(x): the component through u holds at most two sector
    // interiors, and any two such sectors intersect
    for (int u : g.adj[x]) {
        VertexSet removed = sorted_unique(g.adj[x]);
        removed.erase(std::remove(removed.begin(), removed.end(), u), removed.end());
        VertexSet kept2 = complement_set(g.n, removed);
        Graph h2 = induced_subgraph(g, kept2);
        int u_new = static_cast<int>(std::lower_bound(kept2.begin(), kept2.end(), u) -
                                     kept2.begin());
        VertexSet comp;
        for (const VertexSet& comp_new : components(h2)) {
            if (contains(comp_new, u_new)) {
                for (int i : comp_new) comp.push_back(kept2[i]);
                break;
            }
        }
        std::vector<int> inside;
        for (std::size_t s = 0; s < interiors.size(); ++s)
            if (!interiors[s].empty() && set_difference(interiors[s], comp).empty())
                inside.push_back(static_cast<int>(s));
        bool bad = inside.size() > 2;
        for (std::size_t a = 0; a < inside.size() && !bad; ++a)
            for (std::size_t b = a + 1; b < inside.size() && !bad; ++b) {
                VertexSet sa = sorted_unique(w.sectors[inside[a]]);
                VertexSet sb = sorted_unique(w.sectors[inside[b]]);
                if (set_intersection(sa, sb).empty()) bad = true;
            }
        if (bad) {
            report.pass = false;
            report.detail = "neighborhood component violates the two-sector bound for u=" +
                            std::to_string(u);
            report.component = comp;
            report.sectors = inside;
            return report;
        }
    }
    return report;
}

bool verify_path_theorem(const Graph& g, const Wheel& given, const Path& p) {
    Wheel w = require_min_spoke_proper(g, given, "verify_path_theorem");
    if (p.empty() || !is_induced_path(g, p))
        throw std::invalid_argument("verify_path_theorem: not an induced path");
    VertexSet wheel_set = w.vertex_set();
    for (int v : p)
        if (contains(wheel_set, v))
            throw std::invalid_argument("verify_path_theorem: path meets the wheel");
    int center_nbrs = 0;
    for (int v : p)
        if (g.has_edge(w.center, v)) ++center_nbrs;
    if (center_nbrs > 1)
        throw std::invalid_argument("verify_path_theorem: center has two neighbors on the path");

    VertexSet rim_set = sorted_unique(w.rim);
    VertexSet ends;  // rim endpoints of edges from the path to the rim
    for (int v : p)
        for (int u : g.adj[v])
            if (contains(rim_set, u)) ends.push_back(u);
    ends = sorted_unique(std::move(ends));

    std::vector<VertexSet> sector_sets;
    for (const auto& s : w.sectors) sector_sets.push_back(sorted_unique(s));

    bool conclusion;
    if (center_nbrs == 0) {
        conclusion = false;
        for (const auto& sv : sector_sets)
            if (set_difference(ends, sv).empty()) conclusion = true;
        if (ends.empty()) conclusion = true;
    } else {
        conclusion = false;
        const int k = static_cast<int>(sector_sets.size());
        for (int a = 0; a < k && !conclusion; ++a)
            for (int b = a; b < k && !conclusion; ++b) {
                if (a != b && set_intersection(sector_sets[a], sector_sets[b]).empty()) continue;
                if (set_difference(ends, set_union(sector_sets[a], sector_sets[b])).empty())
                    conclusion = true;
            }
        if (ends.empty()) conclusion = true;
    }
    if (!conclusion) return false;

    // unique-neighbor conclusion for the path ends, when its hypotheses hold
    auto rim_nbrs = [&](int v) {
        VertexSet out;
        for (int u : g.adj[v])
            if (contains(rim_set, u)) out.push_back(u);
        return sorted_unique(std::move(out));
    };
    VertexSet n_first = rim_nbrs(p.front());
    VertexSet n_last = rim_nbrs(p.back());
    if (n_first.empty() || n_last.empty()) return true;
    for (std::size_t t = 1; t + 1 < p.size(); ++t)
        if (!rim_nbrs(p[t]).empty()) return true;  // edges from the interior
    VertexSet joint = set_union(n_first, n_last);
    for (const auto& sv : sector_sets)
        if (set_difference(joint, sv).empty()) return true;  // one sector covers both
    for (int v : {p.front(), p.back()}) {
        if (g.has_edge(w.center, v)) continue;
        if (rim_nbrs(v).size() != 1) return false;
    }
    return true;
}

}  // namespace isk4
