#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <vector>

#include "json.hpp"

#include "fixtures.hpp"
#include "isk4/cli.hpp"
#include "isk4/graph_io.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "isk4");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = isk4::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("color on C5 from stdin emits a JSON success with exit 0") {
    CliRun r = run({"color", "-"}, "Dhc\n");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["tool"] == "isk4");
    CHECK(j["version"] == isk4::kToolVersion);
    CHECK(j["result"]["status"] == "success");
    CHECK(j["result"]["colors"].size() == 5);
    CHECK(j["budgets"].contains("exact_bound"));
}

TEST_CASE("color on Petersen refuses with exit 1 and a witness") {
    std::string g6 = isk4::emit_graph6(fixtures::petersen());
    CliRun r = run({"color", "-"}, g6 + "\n");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["result"]["status"] == "refused");
    CHECK(j["result"].contains("isk4"));
}

TEST_CASE("edge list input") {
    CliRun r = run({"color", "-", "--format", "edgelist"}, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(r.code == 0);
}

TEST_CASE("malformed input exits 2 with a diagnostic") {
    CliRun r = run({"color", "-"}, "not-a-graph\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"detect", "--kind", "bogus"}, "Dhc\n").code == 2);
}

TEST_CASE("detect subcommands") {
    CHECK(run({"detect", "--kind", "triangle"}, "C~\n").code == 0);
    CHECK(run({"detect", "--kind", "triangle"}, "Dhc\n").code == 1);
    CHECK(run({"detect", "--kind", "sp"}, "Dhc\n").code == 0);
    CHECK(run({"detect", "--kind", "isk4"}, "C~\n").code == 0);
    CHECK(run({"detect", "--kind", "class"}, "Dhc\n").code == 0);
    CHECK(run({"detect", "--kind", "class"}, "C~\n").code == 1);

    CliRun linkage = run({"detect", "--kind", "linkage", "--vertex", "4", "--hole", "0,1,2,3"},
                         isk4::emit_graph6(isk4::build_graph(
                             5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}})) +
                             "\n");
    CHECK(linkage.code == 0);
}

TEST_CASE("decompose reports steps and recursion trees") {
    CliRun r = run({"decompose"}, "Dhc\n");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["kind"] == "low_degree_vertex");

    CliRun tree = run({"decompose", "--recurse"}, "Dhc\n");
    CHECK(tree.code == 0);
    json jt = json::parse(tree.out);
    CHECK(jt["result"].contains("child"));
}

TEST_CASE("wheels subcommand") {
    std::string g6 = isk4::emit_graph6(fixtures::c8_wheel());
    CliRun r = run({"wheels", "-", "--center", "8"}, g6 + "\n");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["min_rim_wheel"]["center"] == 8);
    CHECK(j["result"]["is_proper_wheel_center"] == true);
    CHECK(run({"wheels"}, "Dhc\n").code == 1);  // wheel-free
}

TEST_CASE("sparse-cycle subcommand") {
    CliRun r = run({"sparse-cycle", "--x", "0"}, "Dhc\n");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["kind"] == "cycle_through_xy");
}

TEST_CASE("gen emits graph6 lines that parse back") {
    CliRun r = run({"gen", "--kind", "sp", "--n", "12", "--count", "3", "--seed", "5"});
    CHECK(r.code == 0);
    auto graphs = isk4::parse_graph6_lines(r.out);
    REQUIRE(graphs.size() == 3);
    for (const auto& g : graphs) CHECK(g.n == 12);

    CliRun w = run({"gen", "--kind", "wheel", "--spokes", "4", "--interiors", "1,1,1,1"});
    CHECK(w.code == 0);
    CHECK(isk4::parse_graph6_lines(w.out).at(0).n == 9);

    CliRun glued = run({"gen", "--kind", "k33glued"}, "Dhc\n");
    CHECK(glued.code == 0);
    CHECK(isk4::parse_graph6_lines(glued.out).at(0).n == 30);
}

TEST_CASE("verify runs a suite and reports deterministically") {
    CliRun a = run({"verify", "--suite", "v2-trichotomy", "--corpus", "internal:5",
                    "--output", "text"});
    CHECK(a.code == 0);
    CliRun b = run({"verify", "--suite", "v2-trichotomy", "--corpus", "internal:5",
                    "--output", "text", "--jobs", "4"});
    CHECK(b.out == a.out);
    CHECK(a.out.find("PASS") != std::string::npos);
    // wall time goes to the diagnostic stream only
    CHECK(a.out.find("wall_ms") == std::string::npos);
    CHECK(a.err.find("wall_ms") != std::string::npos);
}

TEST_CASE("version flag") {
    CliRun r = run({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
}
