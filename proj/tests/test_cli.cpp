#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "imagebin/cli.hpp"

using namespace imagebin;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string data(const std::string& name) { return std::string(IMAGEBIN_DATA_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("documented results") {
    CHECK(run({"check-ifa", data("even_a_prefix.wa")}).out == "yes\n");
    CHECK(run({"modelcheck", data("four_runs_kdis.iba"), data("unary.mc")}).out == "1/1\n");
    CHECK(run({"modelcheck", data("infinitely_many_a.nba"), data("uniform.mc")}).out == "1/1\n");
    auto report = run({"lfsr-report", "--d", "3", "--taps", "011", "--init", "100"});
    CHECK(report.code == exit_ok);
    CHECK(report.out.find("rank: 7\n") != std::string::npos);
    CHECK(report.out.find("diagonal: 4/1\n") != std::string::npos);
    CHECK(report.out.find("off-diagonal: 2/1\n") != std::string::npos);
    CHECK(run({"eval", data("even_a_prefix.wa"), "aab"}).out == "1/1\n");
    CHECK(run({"eval", data("even_a_prefix.wa")}).out == "0/1\n");
    CHECK(run({"equiv", data("even_a_prefix.wa"), data("even_a_prefix_ufa.wa")}).out == "yes\n");
    CHECK(run({"lasso-eval", data("four_runs.nba"), "--cycle", "a"}).out == "accepted: yes\nfinal-runs: 4\n");
    CHECK(run({"lasso-eval", data("four_runs_kdis.iba"), "--cycle", "a"}).out == "1/1\n");
    CHECK(run({"ambiguity-check", data("four_runs.nba"), "--k", "4"}).out == "yes\n");
    CHECK(run({"lfsr", "--d", "3", "--taps", "011", "--init", "100"}).out == "sequence: 1001011\nperiod: 7\n");
}

TEST_CASE("automaton outputs parse back") {
    for (const char* cmd : {"minimize", "complement", "to-dfa", "to-mod2"}) {
        auto r = run({cmd, data("even_a_prefix.wa")});
        CHECK(r.code == exit_ok);
        CHECK(r.out.rfind("kind: ", 0) == 0);
    }
    for (const char* cmd : {"intersect", "union"}) {
        auto r = run({cmd, data("even_a_prefix.wa"), data("even_a_prefix_ufa.wa")});
        CHECK(r.code == exit_ok);
    }
    CHECK(run({"nfa-to-ifa", data("contains_a.nfa")}).code == exit_ok);
    auto k = run({"kdis", data("four_runs.nba"), "--k", "4"});
    CHECK(k.code == exit_ok);
    CHECK(k.err.find("21") != std::string::npos);
}

TEST_CASE("machine-readable output") {
    auto r = run({"--json", "check-ifa", data("not_binary.wa")});
    CHECK(r.code == exit_ok);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "check-ifa");
    CHECK(doc["result"]["image_binary"] == false);
    CHECK(doc["result"]["witness"] == "aa");
    CHECK(doc["result"]["value"] == "2/1");
    CHECK(doc.contains("inputs"));
    CHECK(doc["diagnostics"].is_array());

    auto after = run({"eval", data("even_a_prefix.wa"), "aa", "--json"});
    CHECK(nlohmann::json::parse(after.out)["result"]["value"] == "1/1");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"--help"}).code == exit_ok);
    CHECK(run({"eval"}).code == exit_usage);

    auto missing = run({"eval", data("no_such_file.wa")});
    CHECK(missing.code == exit_validation);
    CHECK(lines(missing.err) == 1);

    auto unknown_letter = run({"eval", data("even_a_prefix.wa"), "abc"});
    CHECK(unknown_letter.code == exit_validation);

    auto semantic = run({"complement", data("not_binary.wa")});
    CHECK(semantic.code == exit_semantic);
    CHECK(semantic.err.find("aa") != std::string::npos);
    CHECK(lines(semantic.err) == 1);

    auto ambiguous = run({"kdis", data("four_runs.nba"), "--k", "3"});
    CHECK(ambiguous.code == exit_semantic);

    auto not_maximal = run({"lfsr-report", "--d", "4", "--taps", "0001", "--init", "1000"});
    CHECK(not_maximal.code == exit_validation);

    auto json_error = run({"--json", "complement", data("not_binary.wa")});
    CHECK(json_error.code == exit_semantic);
    auto doc = nlohmann::json::parse(json_error.out);
    CHECK(doc["error"]["kind"] == "semantic");
    CHECK(doc["error"]["witness"] == "aa");
}

TEST_CASE("generated fixtures are reproducible and usable") {
    auto a = run({"gen", "ifa", "--seed", "42", "--states", "3", "--alphabet", "2"});
    auto b = run({"gen", "ifa", "--seed", "42", "--states", "3", "--alphabet", "2"});
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
    CHECK(run({"gen", "nba", "--components", "2"}).out == run({"gen", "nba", "--components", "2"}).out);
    CHECK(run({"gen", "mc"}).code == exit_ok);
    CHECK(run({"gen", "dfa"}).code == exit_ok);
    CHECK(run({"gen", "nfa"}).code == exit_ok);
    CHECK(run({"gen", "tree"}).code == exit_validation);
}
