// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria 1-10 run over the pinned corpora; the supplementary block
// re-runs the wheel-centric sweeps over generated in-class wheel fixtures,
// where they are not vacuous.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "isk4/coloring.hpp"
#include "isk4/decompose.hpp"
#include "isk4/graph_io.hpp"
#include "isk4/harness.hpp"
#include "isk4/recognizers.hpp"
#include "isk4/rng.hpp"
#include "isk4/wheels.hpp"

using namespace isk4;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("%s %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CorpusSpec criterion_corpus() {
    CorpusSpec spec = CorpusSpec::parse("internal:7");
    spec.filter_connected = true;
    spec.filter_triangle_free = true;
    spec.filter_isk4_free = true;
    return spec;
}

// In-class wheel fixtures: plain wheels over a spread of spoke counts and
// sector lengths, plus copies decorated with pendant paths (degree-one tails
// never create triangles or K4 subdivisions).
std::string write_wheel_corpus() {
    std::vector<Graph> graphs;
    graphs.push_back(gen_wheel(4, {1, 1, 1, 1}));
    graphs.push_back(gen_wheel(4, {2, 1, 1, 1}));
    graphs.push_back(gen_wheel(4, {2, 2, 1, 1}));
    graphs.push_back(gen_wheel(4, {3, 2, 2, 1}));
    graphs.push_back(gen_wheel(5, {1, 1, 1, 1, 1}));
    graphs.push_back(gen_wheel(5, {2, 1, 2, 1, 1}));
    graphs.push_back(gen_wheel(6, {1, 2, 1, 1, 2, 1}));
    const std::size_t plain = graphs.size();
    for (std::size_t i = 0; i < plain; ++i) {
        const Graph& base = graphs[i];
        auto edges = base.edges();
        const int rim0 = 1;  // a sector-interior vertex in gen_wheel's layout
        edges.emplace_back(rim0, base.n);
        edges.emplace_back(base.n, base.n + 1);
        edges.emplace_back(base.n + 1, base.n + 2);
        graphs.push_back(build_graph(base.n + 3, edges));
    }
    std::string path = "acceptance_wheel_corpus.g6";
    std::ofstream out(path);
    for (const Graph& g : graphs) out << emit_graph6(g) << "\n";
    return path;
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    CorpusSpec corpus = criterion_corpus();

    {  // 1. trichotomy totality, single-threaded, under five minutes
        const auto t = std::chrono::steady_clock::now();
        SuiteReport r = run_suite("v2-trichotomy", corpus, 1);
        double secs = seconds_since(t);
        report("criterion-1 trichotomy-totality",
               r.pass() && r.checked > 0 && secs < 300.0,
               "checked " + std::to_string(r.checked) + ", " + std::to_string(secs) + "s");
    }
    {  // 2. 3-colorability with verification and oracle agreement
        SuiteReport r = run_suite("3color", corpus, 1);
        report("criterion-2 three-colorability", r.pass() && r.checked > 0,
               "checked " + std::to_string(r.checked));
    }
    {  // 3. no linked vertex-hole pair, under ten minutes
        const auto t = std::chrono::steady_clock::now();
        SuiteReport r = run_suite("nolink", corpus, 1);
        double secs = seconds_since(t);
        report("criterion-3 nolink-sweep", r.pass() && r.checked > 0 && secs < 600.0,
               "checked " + std::to_string(r.checked) + ", " + std::to_string(secs) + "s");
    }
    {  // 4. minimum-rim wheels are proper
        SuiteReport r = run_suite("proper-exists", corpus, 1);
        report("criterion-4 lemma-proper", r.pass(),
               "checked " + std::to_string(r.checked) + " (no wheel fits in seven vertices)");
    }
    {  // 5. wheelmain and paths sweeps
        SuiteReport a = run_suite("wheelmain", corpus, 1);
        SuiteReport b = run_suite("paths", corpus, 1);
        report("criterion-5 wheelmain-and-paths", a.pass() && b.pass(),
               "checked " + std::to_string(a.checked) + "+" + std::to_string(b.checked));
    }
    {  // 6. search-mode ISK4 agrees with subset enumeration
        int disagreements = 0, instances = 0;
        for (const Graph& g : enumerate_all_graphs(7)) {
            Isk4Result exact = find_isk4_exact(g);
            Isk4Result search = find_isk4_search(g);
            if (exact.status != search.status) ++disagreements;
            ++instances;
        }
        for (int i = 0; i < 1000; ++i) {
            Graph g = gen_random(12, 0.25, 900000 + static_cast<unsigned>(i));
            Isk4Result exact = find_isk4_exact(g);
            Isk4Result search = find_isk4_search(g);
            if (exact.status != search.status) ++disagreements;
            if (exact.witness && !validate_isk4_witness(g, *exact.witness)) ++disagreements;
            if (search.witness && !validate_isk4_witness(g, *search.witness)) ++disagreements;
            ++instances;
        }
        report("criterion-6 oracle-agreement", disagreements == 0,
               std::to_string(instances) + " instances, " + std::to_string(disagreements) +
                   " disagreements");
    }
    {  // 7. series-parallel graphs avoid every forbidden structure
        SuiteReport r = run_suite("duffin", CorpusSpec::parse("gen-sp:500:20260809:40"), 1);
        report("criterion-7 duffin", r.pass() && r.checked == 500,
               "checked " + std::to_string(r.checked));
    }
    {  // 8. the glued fixture behaves exactly as constructed
        Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        Graph g = gen_k33_glued(c5);
        bool triangle_free = !find_triangle(g);
        bool isk4_free = find_isk4_search(g).status == SearchStatus::absent;
        int min_deg = g.n;
        for (int v = 0; v < g.n; ++v) min_deg = std::min(min_deg, g.degree(v));
        bool not_bipartite = !two_coloring(g).has_value();
        DecompositionStep step = decomposition_step(g);
        bool cutset = step.kind == DecompositionStep::Kind::clique_cutset;
        ColorResult color = three_color(g);
        std::set<int> used(color.coloring.begin(), color.coloring.end());
        bool colored = color.status == ColorResult::Status::success &&
                       verify_coloring(g, color.coloring).ok && used.size() == 3;
        bool chi3 = chromatic_oracle(g, 4) == 3;
        report("criterion-8 glued-fixture",
               triangle_free && isk4_free && min_deg == 3 && not_bipartite && cutset &&
                   colored && chi3);
    }
    {  // 9. a far vertex of low degree exists for every non-center pair
        SuiteReport r = run_suite("main-noncenter", corpus, 1);
        report("criterion-9 main-noncenter", r.pass(),
               "checked " + std::to_string(r.checked) +
                   " (no in-class wheel fits in seven vertices)");
    }
    {  // 10. byte-identical reports regardless of parallelism
        bool identical = true;
        for (const char* suite : {"nolink", "v2-trichotomy", "duffin"}) {
            CorpusSpec spec = suite == std::string("duffin")
                                  ? CorpusSpec::parse("gen-sp:100:20260809:30")
                                  : corpus;
            SuiteReport once = run_suite(suite, spec, 1);
            SuiteReport again = run_suite(suite, spec, 1);
            SuiteReport wide = run_suite(suite, spec, 8);
            if (once.canonical_text() != again.canonical_text()) identical = false;
            if (once.canonical_text() != wide.canonical_text()) identical = false;
            if (once.canonical_json() != wide.canonical_json()) identical = false;
        }
        report("criterion-10 determinism", identical);
    }

    // Supplementary: the wheel-centric suites again over generated in-class
    // wheel fixtures, where their hypotheses are populated.
    {
        std::string path = write_wheel_corpus();
        CorpusSpec spec;
        spec.source = CorpusSpec::Source::file;
        spec.path = path;
        bool all = true;
        std::string counts;
        for (const char* suite :
             {"proper-exists", "wheelmain", "paths", "main-noncenter", "starcut", "contract",
              "noncenters", "almost-proper", "nolink", "3color"}) {
            SuiteReport r = run_suite(suite, spec, 8);
            if (!r.pass() || r.checked == 0) all = false;
            counts += std::string(suite) + "=" + std::to_string(r.checked) + " ";
        }
        report("supplementary wheel-fixture-sweeps", all, counts);
        std::remove(path.c_str());
    }
    {  // the module-level properties quantify over the whole enumeration,
       // disconnected graphs included
        CorpusSpec spec = CorpusSpec::parse("internal:7");
        bool all = true;
        std::string counts;
        for (const char* suite :
             {"nolink", "v2-trichotomy", "3color", "levesque-trichotomy", "todo",
              "starcut", "contract", "noncenters", "almost-proper"}) {
            SuiteReport r = run_suite(suite, spec, 8);
            if (!r.pass() || r.checked == 0) all = false;
            counts += std::string(suite) + "=" + std::to_string(r.checked) + " ";
        }
        report("supplementary unfiltered-enumeration-sweeps", all, counts);
    }

    std::printf("%s acceptance (%d criterion failures, %.1fs total)\n",
                failures == 0 ? "PASS" : "FAIL", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
