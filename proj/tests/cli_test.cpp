#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ehrhart/cli.hpp"

using namespace ehrhart;

namespace {

const std::string corpus_dir = EHRHART_TEST_CORPUS;

std::string polytope(const std::string& name) { return corpus_dir + "/polytopes/" + name + ".json"; }

RunResult call(const std::string& command, std::vector<std::string> inputs = {}) {
    RunConfig c;
    c.command = command;
    c.inputs = std::move(inputs);
    return run(c);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("every command is registered") {
    const auto cmds = commands();
    for (const char* name : {"count", "ehrhart", "hstar", "reciprocity", "cone-reciprocity", "specialize", "decompose",
                             "triangulate", "inequalities", "hibi", "ab", "monotonic", "semimagic", "corpus-verify"})
        CHECK(std::find(cmds.begin(), cmds.end(), name) != cmds.end());
    const RunResult r = call("nonsense");
    CHECK(r.exit_code == 1);
    CHECK(r.output["kind"] == "invalid-argument");
}

TEST_CASE("ehrhart and hstar on the unit square") {
    const RunResult e = call("ehrhart", {polytope("square-1")});
    CHECK(e.exit_code == 0);
    CHECK(e.output["poly"] == "n^2+2n+1");
    CHECK(e.output["hstar"] == Json::array({"1", "1"}));
    CHECK(e.output["period"] == 1);

    const RunResult h = call("hstar", {polytope("segment-half")});
    CHECK(h.exit_code == 0);
    CHECK(h.output["period"] == 2);

    const RunResult q = call("ehrhart", {polytope("segment-half")});
    CHECK(q.output["poly"].is_array());
    CHECK(q.output["poly"].size() == 2);
}

TEST_CASE("count lists closed and interior counts") {
    RunConfig c;
    c.command = "count";
    c.inputs = {polytope("square-1")};
    c.max_n = 3;
    const RunResult r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.output["counts"] == Json::array({1, 4, 9, 16}));
    CHECK(r.output["interior_counts"] == Json::array({0, 0, 1, 4}));
}

TEST_CASE("report commands pass on sample inputs") {
    for (const char* cmd : {"reciprocity", "specialize", "decompose", "hibi", "ab", "inequalities"}) {
        INFO(cmd);
        const RunResult r = call(cmd, {polytope("square-2")});
        CHECK(r.exit_code == 0);
        CHECK(r.output["verdict"] == "pass");
    }
    const RunResult t = call("triangulate", {polytope("square-1")});
    CHECK(t.output["cells"].size() == 2);
    const RunResult m = call("monotonic", {polytope("square-1"), polytope("square-2")});
    CHECK(m.output["verdict"] == "pass");
    const RunResult k = call("cone-reciprocity", {corpus_dir + "/cones/cone-cross-2.json"});
    CHECK(k.output["verdict"] == "pass");
    const RunResult inv = call("monotonic", {polytope("square-2"), polytope("square-1")});
    CHECK(inv.exit_code == 1);
    CHECK(inv.output["kind"] == "invalid-argument");
}

TEST_CASE("semimagic command") {
    RunConfig c;
    c.command = "semimagic";
    c.n = 3;
    c.rmax = 5;
    const RunResult r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.output["details"]["values"] == Json::array({1, 6, 21, 55, 120, 231}));
    c.n = 7;
    CHECK(run(c).output["kind"] == "unsupported");
}

TEST_CASE("errors carry a kind and parse errors a position") {
    const auto broken = write_temp("ehrhart-cli-broken.json", "{\"vertices\": [[0, 0], [1, 0]\n");
    const RunResult r = call("ehrhart", {broken.string()});
    CHECK(r.exit_code == 1);
    CHECK(r.output["kind"] == "parse-error");
    const std::string msg = r.output["error"];
    CHECK(msg.find("line") != std::string::npos);

    const auto bad_rat = write_temp("ehrhart-cli-badrat.json", R"({"vertices": [["1/0"], ["1"]]})");
    CHECK(call("ehrhart", {bad_rat.string()}).output["kind"] == "parse-error");

    CHECK(call("ehrhart", {"/nonexistent/p.json"}).exit_code == 1);
    CHECK(call("ehrhart").output["kind"] == "invalid-argument");

    RunConfig pole;
    pole.command = "specialize";
    pole.inputs = {polytope("segment-1")};
    pole.x0 = {"1"};
    CHECK(run(pole).output["kind"] == "pole");

    RunConfig flavor;
    flavor.command = "triangulate";
    flavor.inputs = {polytope("square-1")};
    flavor.flavor = "fancy";
    CHECK(run(flavor).output["kind"] == "invalid-argument");
}

TEST_CASE("run_and_emit writes the document and returns the exit code") {
    RunConfig c;
    c.command = "hstar";
    c.inputs = {polytope("cube-3")};
    std::ostringstream out, err;
    CHECK(run_and_emit(c, out, err) == 0);
    const Json j = Json::parse(out.str());
    CHECK(j["hstar"] == Json::array({"1", "4", "1"}));
    CHECK(err.str().empty());

    c.out = (std::filesystem::temp_directory_path() / "ehrhart-cli-out.json").string();
    std::ostringstream out2;
    CHECK(run_and_emit(c, out2, err) == 0);
    CHECK(out2.str().empty());
    std::ifstream f(c.out);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == out.str());
}

TEST_CASE("corpus-verify is deterministic for a fixed seed") {
    RunConfig c;
    c.command = "corpus-verify";
    c.corpus = corpus_dir;
    c.random_count = 5;
    const RunResult a = run(c);
    const RunResult b = run(c);
    CHECK(a.output == b.output);
    CHECK(a.output["verdict"] != "fail");
    CHECK(a.exit_code == 0);
    CHECK(a.output["summary"]["failed"] == 0);
}
