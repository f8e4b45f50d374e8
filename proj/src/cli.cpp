#include "isk4/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "isk4/coloring.hpp"
#include "isk4/decompose.hpp"
#include "isk4/graph_io.hpp"
#include "isk4/harness.hpp"
#include "isk4/json_out.hpp"
#include "isk4/recognizers.hpp"
#include "isk4/sparse_cycles.hpp"
#include "isk4/wheels.hpp"

namespace isk4 {

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct CommonOpts {
    std::string input = "-";
    std::string format = "g6";
    std::string output = "json";
    int exact_bound = kDefaultExactBound;
    long long budget = kDefaultSearchBudget;
    long long hole_cap = kDefaultHoleCap;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", opts.input, "input file, or - for standard input");
    cmd->add_option("--format", opts.format, "input format: g6 or edgelist")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    cmd->add_option("--output", opts.output, "output mode: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--exact-bound", opts.exact_bound,
                    "largest order for exhaustive subset enumeration");
    cmd->add_option("--budget", opts.budget, "search expansion budget");
    cmd->add_option("--hole-cap", opts.hole_cap, "induced cycle enumeration cap");
}

std::string read_all(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_input(const CommonOpts& opts, std::istream& stdin_stream) {
    std::string text;
    if (opts.input == "-") {
        text = read_all(stdin_stream);
    } else {
        std::ifstream file(opts.input, std::ios::binary);
        if (!file) throw parse_error("cannot open " + opts.input, 0);
        text = read_all(file);
    }
    if (opts.format == "edgelist") return parse_edge_list(text);
    auto graphs = parse_graph6_lines(text);
    if (graphs.empty()) throw parse_error("no graph in input", 0);
    return graphs.front();
}

json header(const CommonOpts& opts, const char* command) {
    return json{{"tool", "isk4"},
                {"version", kToolVersion},
                {"command", command},
                {"budgets",
                 json{{"exact_bound", opts.exact_bound},
                      {"budget", opts.budget},
                      {"hole_cap", opts.hole_cap}}}};
}

void emit(std::ostream& out, const CommonOpts& opts, json payload, const std::string& text) {
    if (opts.output == "json")
        out << payload.dump(2) << "\n";
    else
        out << text;
}

int cmd_color(const CommonOpts& opts, std::istream& in, std::ostream& out) {
    Graph g = load_input(opts, in);
    ColorResult res = three_color(g, opts.exact_bound, opts.budget);
    json j = header(opts, "color");
    j["result"] = to_json(res);
    std::ostringstream text;
    int code = kExitPositive;
    switch (res.status) {
        case ColorResult::Status::success: {
            text << "3-coloring:";
            for (int c : res.coloring) text << ' ' << c;
            text << "\n";
            break;
        }
        case ColorResult::Status::refused:
            text << "refused: graph is outside the class\n";
            code = kExitNegative;
            break;
        case ColorResult::Status::inconclusive:
            text << "inconclusive: witness search budget exhausted\n";
            code = kExitInconclusive;
            break;
    }
    emit(out, opts, std::move(j), text.str());
    return code;
}

int cmd_detect(const CommonOpts& opts, const std::string& kind, int vertex,
               const std::string& hole_csv, std::istream& in, std::ostream& out) {
    Graph g = load_input(opts, in);
    json j = header(opts, "detect");
    j["kind"] = kind;
    std::ostringstream text;
    int code = kExitPositive;

    if (kind == "triangle") {
        auto t = find_triangle(g);
        j["result"] = t ? to_json(*t) : json{{"triangle", nullptr}};
        text << (t ? "triangle found\n" : "triangle-free\n");
        code = t ? kExitPositive : kExitNegative;
    } else if (kind == "isk4") {
        Isk4Result r = find_isk4(g, opts.exact_bound, opts.budget);
        j["result"] = json{{"status", r.status == SearchStatus::found      ? "found"
                                      : r.status == SearchStatus::absent ? "absent"
                                                                         : "inconclusive"}};
        if (r.witness) j["result"]["isk4"] = to_json(*r.witness);
        text << j["result"]["status"].get<std::string>() << "\n";
        code = r.status == SearchStatus::found        ? kExitPositive
               : r.status == SearchStatus::absent     ? kExitNegative
                                                      : kExitInconclusive;
    } else if (kind == "k33") {
        auto w = find_k33_subgraph(g);
        j["result"] = w ? to_json(*w) : json{{"k33", nullptr}};
        text << (w ? "K3,3 subgraph found\n" : "no K3,3 subgraph\n");
        code = w ? kExitPositive : kExitNegative;
    } else if (kind == "sp") {
        SpResult r = is_series_parallel(g);
        j["result"] = to_json(r);
        text << (r.series_parallel ? "series-parallel\n" : "not series-parallel\n");
        code = r.series_parallel ? kExitPositive : kExitNegative;
    } else if (kind == "class") {
        ClassReport r = class_membership(g, opts.exact_bound, opts.budget);
        j["result"] = to_json(r);
        text << (r.verdict == ClassReport::Verdict::in_class ? "in class\n"
                 : r.verdict == ClassReport::Verdict::out_of_class
                     ? "out of class\n"
                     : "inconclusive\n");
        code = r.verdict == ClassReport::Verdict::in_class       ? kExitPositive
               : r.verdict == ClassReport::Verdict::out_of_class ? kExitNegative
                                                                 : kExitInconclusive;
    } else if (kind == "linkage") {
        std::vector<int> hole;
        std::stringstream ss(hole_csv);
        for (std::string item; std::getline(ss, item, ',');) hole.push_back(std::stoi(item));
        LinkageResult r = find_linkage(g, vertex, hole, opts.budget);
        j["result"] = json{{"status", r.status == SearchStatus::found      ? "found"
                                      : r.status == SearchStatus::absent ? "absent"
                                                                         : "inconclusive"}};
        if (r.witness) j["result"]["linkage"] = to_json(*r.witness);
        text << j["result"]["status"].get<std::string>() << "\n";
        code = r.status == SearchStatus::found        ? kExitPositive
               : r.status == SearchStatus::absent     ? kExitNegative
                                                      : kExitInconclusive;
    }
    emit(out, opts, std::move(j), text.str());
    return code;
}

json decompose_tree(const Graph& g, int exact_bound, long long budget, int depth) {
    DecompositionStep step = decomposition_step(g, exact_bound, budget);
    json j = to_json(step);
    if (depth <= 0 || g.n <= 3) return j;
    if (step.kind == DecompositionStep::Kind::low_degree_vertex) {
        VertexSet keep = complement_set(g.n, {step.vertex});
        j["child"] = decompose_tree(induced_subgraph(g, keep), exact_bound, budget, depth - 1);
    } else if (step.kind == DecompositionStep::Kind::clique_cutset) {
        VertexSet keep_a = set_union(step.cut->side_a, step.cut->cutset);
        VertexSet keep_b = set_union(step.cut->side_b, step.cut->cutset);
        j["children"] = json::array(
            {decompose_tree(induced_subgraph(g, keep_a), exact_bound, budget, depth - 1),
             decompose_tree(induced_subgraph(g, keep_b), exact_bound, budget, depth - 1)});
    }
    return j;
}

int cmd_decompose(const CommonOpts& opts, bool recurse, std::istream& in, std::ostream& out) {
    Graph g = load_input(opts, in);
    json j = header(opts, "decompose");
    int code = kExitPositive;
    if (recurse) {
        j["result"] = decompose_tree(g, opts.exact_bound, opts.budget, g.n);
    } else {
        DecompositionStep step = decomposition_step(g, opts.exact_bound, opts.budget);
        j["result"] = to_json(step);
        if (step.kind == DecompositionStep::Kind::not_in_class) code = kExitNegative;
        if (step.kind == DecompositionStep::Kind::inconclusive) code = kExitInconclusive;
    }
    emit(out, opts, std::move(j), j["result"].dump(2) + "\n");
    return code;
}

int cmd_wheels(const CommonOpts& opts, int center, std::istream& in, std::ostream& out) {
    Graph g = load_input(opts, in);
    json j = header(opts, "wheels");
    WheelSearchResult min_rim = find_wheel(g, opts.hole_cap);
    j["result"]["min_rim_wheel"] = min_rim.wheel ? to_json(*min_rim.wheel) : json();
    if (min_rim.wheel)
        j["result"]["min_rim_wheel_proper"] = to_json(is_proper_wheel(g, *min_rim.wheel));
    FindProperWheelResult proper = find_proper_wheel(g, opts.hole_cap);
    j["result"]["proper_wheel"] = proper.wheel ? to_json(*proper.wheel) : json();
    j["result"]["improper_only"] = proper.improper_only;
    if (center >= 0) {
        MinSpokeResult ms = min_spoke_proper_wheel(g, center, opts.hole_cap);
        j["result"]["min_spoke_wheel"] = ms.wheel ? to_json(*ms.wheel) : json();
        CenterResult cr = is_proper_wheel_center(g, center, opts.hole_cap);
        j["result"]["is_proper_wheel_center"] = cr.is_center;
    }
    bool inconclusive = min_rim.inconclusive || proper.inconclusive;
    j["result"]["inconclusive"] = inconclusive;
    std::ostringstream text;
    text << (min_rim.wheel ? "wheel found\n" : "wheel-free\n");
    emit(out, opts, std::move(j), text.str());
    if (inconclusive) return kExitInconclusive;
    return min_rim.wheel ? kExitPositive : kExitNegative;
}

int cmd_sparse_cycle(const CommonOpts& opts, int x, int y, std::istream& in,
                     std::ostream& out) {
    Graph g = load_input(opts, in);
    if (y < 0) y = x;
    SparseCycleResult res = sparse_cycle(g, x, y, opts.hole_cap);
    json j = header(opts, "sparse-cycle");
    j["result"] = res.outcome ? to_json(*res.outcome) : json{{"kind", "none"}};
    j["result"]["inconclusive"] = res.inconclusive;
    emit(out, opts, std::move(j), j["result"].dump(2) + "\n");
    if (res.outcome) return kExitPositive;
    return res.inconclusive ? kExitInconclusive : kExitNegative;
}

int cmd_gen(const CommonOpts& opts, const std::string& kind, int n, int count,
            std::uint64_t seed, double p, int spokes, const std::string& interiors_csv,
            std::istream& in, std::ostream& out) {
    if (kind == "sp") {
        for (int i = 0; i < count; ++i)
            out << emit_graph6(gen_series_parallel(n, seed + static_cast<unsigned>(i))) << "\n";
    } else if (kind == "random") {
        for (int i = 0; i < count; ++i)
            out << emit_graph6(gen_random(n, p, seed + static_cast<unsigned>(i))) << "\n";
    } else if (kind == "wheel") {
        std::vector<int> interiors;
        std::stringstream ss(interiors_csv);
        for (std::string item; std::getline(ss, item, ',');)
            interiors.push_back(std::stoi(item));
        if (interiors.empty()) interiors.assign(spokes, 1);
        out << emit_graph6(gen_wheel(spokes, interiors)) << "\n";
    } else if (kind == "k33glued") {
        Graph base = load_input(opts, in);
        out << emit_graph6(gen_k33_glued(base)) << "\n";
    }
    return kExitPositive;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, const std::string& corpus,
               const std::vector<std::string>& filters, int jobs, bool progress,
               std::ostream& out, std::ostream& err) {
    CorpusSpec spec = CorpusSpec::parse(corpus);
    for (const std::string& f : filters) {
        if (f == "triangle-free") spec.filter_triangle_free = true;
        else if (f == "isk4-free") spec.filter_isk4_free = true;
        else if (f == "k33-free") spec.filter_k33_free = true;
        else if (f == "connected") spec.filter_connected = true;
        else throw CLI::ValidationError("--filter", "unknown filter " + f);
    }
    SuiteReport report = run_suite(suite, spec, jobs, progress);
    if (opts.output == "json")
        out << report.canonical_json();
    else
        out << report.canonical_text();
    err << "# wall_ms " << report.wall_ms << "\n";
    if (report.inconclusive > 0) return kExitInconclusive;
    return report.pass() ? kExitPositive : kExitNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"structural decomposition and certified 3-coloring of "
                 "triangle-free graphs without induced K4 subdivisions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CommonOpts opts;

    auto* color = app.add_subcommand("color", "3-color a graph or refuse with a witness");
    add_common(color, opts);

    auto* detect = app.add_subcommand("detect", "find forbidden structures");
    add_common(detect, opts);
    std::string detect_kind = "class";
    int detect_vertex = -1;
    std::string detect_hole;
    detect->add_option("--kind", detect_kind, "triangle, isk4, k33, sp, linkage or class")
        ->check(CLI::IsMember({"triangle", "isk4", "k33", "sp", "linkage", "class"}));
    detect->add_option("--vertex", detect_vertex, "linkage: vertex to link");
    detect->add_option("--hole", detect_hole, "linkage: hole as comma-separated vertices");

    auto* decompose = app.add_subcommand("decompose", "one decomposition step");
    add_common(decompose, opts);
    bool recurse = false;
    decompose->add_flag("--recurse", recurse, "emit the full recursion tree");

    auto* wheels = app.add_subcommand("wheels", "find and verify proper wheels");
    add_common(wheels, opts);
    int wheel_center = -1;
    wheels->add_option("--center", wheel_center, "also report the min-spoke wheel at a center");

    auto* sparse = app.add_subcommand("sparse-cycle", "cycles of mostly degree-two vertices");
    add_common(sparse, opts);
    int sx = 0, sy = -1;
    sparse->add_option("--x", sx, "first vertex")->required();
    sparse->add_option("--y", sy, "second vertex (defaults to x)");

    auto* gen = app.add_subcommand("gen", "emit generated corpora as graph6");
    add_common(gen, opts);
    std::string gen_kind = "sp";
    int gen_n = 10, gen_count = 1, gen_spokes = 4;
    std::uint64_t gen_seed = 1;
    double gen_p = 0.25;
    std::string gen_interiors;
    gen->add_option("--kind", gen_kind, "sp, random, wheel or k33glued")
        ->check(CLI::IsMember({"sp", "random", "wheel", "k33glued"}));
    gen->add_option("--n", gen_n, "target order");
    gen->add_option("--count", gen_count, "number of graphs");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--p", gen_p, "edge probability (random)");
    gen->add_option("--spokes", gen_spokes, "spoke count (wheel)");
    gen->add_option("--interiors", gen_interiors, "sector interior lengths (wheel)");

    auto* verify = app.add_subcommand("verify", "run a theorem suite over a corpus");
    add_common(verify, opts, false);
    std::string suite, corpus = "internal:7";
    std::vector<std::string> filters;
    int jobs = 1;
    bool progress = false;
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--corpus", corpus,
                       "internal:N | file:PATH | gen-sp:COUNT:SEED[:MAXN] | "
                       "gen-random:COUNT:SEED:N:P");
    verify->add_option("--filter", filters,
                       "corpus filters: connected, triangle-free, isk4-free, k33-free");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--progress", progress, "progress to the diagnostic stream");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        // CLI11 reserves 0 for --help/--version
        out << msg.str();
        return code == 0 ? kExitPositive : kExitUsage;
    }

    try {
        if (app.got_subcommand(color)) return cmd_color(opts, in, out);
        if (app.got_subcommand(detect))
            return cmd_detect(opts, detect_kind, detect_vertex, detect_hole, in, out);
        if (app.got_subcommand(decompose)) return cmd_decompose(opts, recurse, in, out);
        if (app.got_subcommand(wheels)) return cmd_wheels(opts, wheel_center, in, out);
        if (app.got_subcommand(sparse)) return cmd_sparse_cycle(opts, sx, sy, in, out);
        if (app.got_subcommand(gen))
            return cmd_gen(opts, gen_kind, gen_n, gen_count, gen_seed, gen_p, gen_spokes,
                           gen_interiors, in, out);
        if (app.got_subcommand(verify))
            return cmd_verify(opts, suite, corpus, filters, jobs, progress, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace isk4
