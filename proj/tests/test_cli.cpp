#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ppl/cli.hpp"

using namespace ppl;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ppl_verify");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST_CASE("theorem run emits one passing record per sample") {
    const Run r = invoke({"verify", "theorem", "--p", "7", "--n", "3", "--k", "2", "--samples", "20", "--seed", "42",
                       "--format", "json"});
    CHECK(r.code == cli::kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schemaVersion"] == 1);
    CHECK(j["check"] == "theorem");
    CHECK(j["seed"] == 42);
    CHECK(j["hbar"] == "x^2 + 1");
    CHECK(j["perSample"].size() == 20);
    for (const auto& s : j["perSample"]) CHECK(s["pass"] == true);
}

TEST_CASE("configuration errors use their own exit code") {
    CHECK(invoke({"verify", "theorem", "--p", "5", "--n", "4"}).code == cli::kExitConfig);
    CHECK(invoke({"verify", "delprop", "--p", "5", "--n", "3"}).code == cli::kExitConfig);
    CHECK(invoke({"verify", "nonsense"}).code == cli::kExitConfig);
    CHECK(invoke({"verify", "theorem", "--n", "x"}).code == cli::kExitConfig);
    CHECK(invoke({"verify", "theorem", "--format", "xml"}).code == cli::kExitConfig);
    CHECK(invoke({"verify", "all", "--matrix", "huge"}).code == cli::kExitConfig);
    CHECK(invoke({"verify", "theorem", "--replay", "/nonexistent/file.json"}).code == cli::kExitConfig);
    CHECK(invoke({}).code == cli::kExitConfig);
}

TEST_CASE("verification failures exit with 1") {
    // Too few series terms: every sample is a precision shortfall, never a pass.
    const Run r = invoke({"verify", "theorem", "--p", "7", "--n", "3", "--M", "2", "--samples", "3", "--format", "json"});
    CHECK(r.code == cli::kExitFail);
    const auto j = nlohmann::json::parse(r.out);
    for (const auto& s : j["perSample"]) CHECK(s["error"] == "precision");
}

TEST_CASE("identical configurations give byte-identical reports") {
    const std::vector<std::string> args = {"verify", "delprop", "--p",  "7", "--n",      "2",
                                           "--k",    "2",       "--seed", "5", "--format", "json"};
    const Run a = invoke(args);
    const Run b = invoke(args);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--jobs", "4"});
    const Run c = invoke(threaded);
    CHECK(a.code == cli::kExitPass);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("replay re-executes exactly the named sample") {
    const Run full = invoke({"verify", "maincong", "--p", "11", "--n", "3", "--samples", "8", "--seed", "3", "--format",
                          "json"});
    REQUIRE(full.code == cli::kExitPass);
    const auto report = nlohmann::json::parse(full.out);
    const auto& rec = report["perSample"][5];
    const std::string path = temp_file("ppl_replay_record.json", rec.dump());
    const Run one = invoke({"verify", "maincong", "--p", "11", "--n", "3", "--replay", path, "--format", "json"});
    CHECK(one.code == cli::kExitPass);
    const auto j = nlohmann::json::parse(one.out);
    REQUIRE(j["perSample"].size() == 1);
    CHECK(j["perSample"][0].dump() == rec.dump());

    // A whole report carries its own parameters.
    const std::string rpath = temp_file("ppl_replay_report.json", full.out);
    const Run again = invoke({"verify", "maincong", "--replay", rpath, "--format", "json"});
    CHECK(again.code == cli::kExitPass);
    CHECK(nlohmann::json::parse(again.out)["perSample"] == report["perSample"]);
}

TEST_CASE("replay documents") {
    CHECK(cli::replay_tasks(nlohmann::json::parse(R"({"index":3,"sampleSeed":9})")).size() == 1);
    CHECK(cli::replay_tasks(nlohmann::json::parse(R"([{"index":3,"sampleSeed":9},{"index":4,"sampleSeed":1}])"))
              .size() == 2);
    const auto rep = nlohmann::json::parse(
        R"({"perSample":[{"index":0,"sampleSeed":1,"pass":true},{"index":1,"sampleSeed":2,"pass":false}]})");
    const auto t = cli::replay_tasks(rep);
    REQUIRE(t.size() == 1);
    CHECK(t[0].index == 1);
    CHECK_THROWS_AS(cli::replay_tasks(nlohmann::json::parse(R"({"index":3})")), std::invalid_argument);
}

TEST_CASE("environment overrides fill unset precisions") {
    setenv("PPL_PRECISION", "9", 1);
    setenv("PPL_SERIES_M", "30", 1);
    CheckParams cp;
    cp.m = 4;
    cli::apply_env(cp);
    CHECK(cp.A == 9);
    CHECK(cp.m == 4);
    CHECK(cp.M == 30);
    const Run r = invoke({"verify", "theorem", "--p", "7", "--n", "3", "--samples", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["A"] == 9);
    CHECK(j["M"] == 30);
    setenv("PPL_PRECISION", "abc", 1);
    CHECK(invoke({"verify", "theorem", "--p", "7", "--n", "3"}).code == cli::kExitConfig);
    unsetenv("PPL_PRECISION");
    unsetenv("PPL_SERIES_M");
}

TEST_CASE("f-lemmas, n ranges, identities, tables and coefficients") {
    const Run f = invoke({"verify", "f-lemmas", "--p", "7", "--n", "1..3", "--samples", "4", "--format", "json"});
    CHECK(f.code == cli::kExitPass);
    CHECK(nlohmann::json::parse(f.out)["reports"].size() == 6);
    CHECK(invoke({"verify", "identities", "--n", "6"}).code == cli::kExitPass);

    const Run t = invoke({"finite-table", "--p", "5", "--n", "2", "--k", "2", "--format", "json"});
    CHECK(t.code == cli::kExitPass);
    const auto tj = nlohmann::json::parse(t.out);
    CHECK(tj["rows"].size() == 25);
    CHECK(tj["rows"][0]["li"] == nlohmann::json::array({0, 0}));
    // li_2(1) = sum 1/j^2 = 1 + 4 + 4 + 1 = 0 mod 5.
    CHECK(tj["rows"][1]["li"] == nlohmann::json::array({0, 0}));
    // li_2(2) = 2 + 4/4 + 8/9 + 16/16 = 2 + 1 + 2 + 1 = 1 mod 5.
    CHECK(tj["rows"][2]["li"] == nlohmann::json::array({1, 0}));

    const Run c = invoke({"coeffs", "--n", "3", "--format", "json"});
    const auto cj = nlohmann::json::parse(c.out);
    CHECK(cj["e"] == nlohmann::json::array({"0", "0", "-1", "-3"}));
    CHECK(cj["c"] == "1/4");
    CHECK(cj["d"] == "1");
    CHECK(cj["a"][0] == "-3");
}
