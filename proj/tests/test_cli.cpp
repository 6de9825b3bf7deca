#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "json.hpp"
#include "sharphardy/cli.hpp"
#include "sharphardy/report.hpp"

using namespace sharphardy;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("sharphardy_test_" + name);
}

}  // namespace

TEST_CASE("list prints every case as JSON or CSV") {
    const Run r = run({"list"});
    CHECK(r.code == cli::kPass);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 23);
    CHECK(j[0].contains("regimes"));
    const Run c = run({"list", "--format", "csv"});
    CHECK(c.code == cli::kPass);
    CHECK(c.out.rfind("id,label\n", 0) == 0);
}

TEST_CASE("verify exit codes: pass, fail, input error, numerical failure") {
    CHECK(run({"verify", "--case", "H1", "--p", "2", "--f", "ind:0,1,1"}).code == cli::kPass);
    CHECK(run({"verify", "--case", "B1", "--p", "1", "--alpha", "1", "--ell", "1", "--f", "ind:0,1,1", "--log-weight",
               "as-printed"})
              .code == cli::kFail);
    CHECK(run({"verify", "--case", "H1", "--p", "2", "--f", "pow:1,-0.5"}).code == cli::kNumeric);
    CHECK(run({"verify", "--case", "R1", "--p", "2", "--alpha", "3", "--f", "ind:0,0.5,1"}).code == cli::kInput);
    CHECK(run({"verify", "--case", "nope", "--p", "2", "--f", "ind:0,1,1"}).code == cli::kInput);
    CHECK(run({"verify", "--case", "H1", "--p", "two", "--f", "ind:0,1,1"}).code == cli::kInput);
    CHECK(run({"verify", "--case", "H1", "--p", "2"}).code == cli::kInput);
    CHECK(run({"verify", "--case", "H1", "--p", "2", "--f", "ind:0,1,1", "--bogus", "1"}).code == cli::kInput);
    CHECK(run({"verify", "--case", "H1", "--p", "2,3", "--f", "ind:0,1,1"}).code == cli::kInput);
    CHECK(run({}).code == cli::kInput);
}

TEST_CASE("a flag the case does not read is refused with its regimes") {
    const Run r = run({"verify", "--case", "C2", "--p", "2", "--alpha", "1", "--f", "ind:0,1,1"});
    CHECK(r.code == cli::kInput);
    CHECK(r.err.find("alpha") != std::string::npos);
    CHECK(r.err.find("p > 1") != std::string::npos);
}

TEST_CASE("verify report carries the documented fields") {
    const Run r = run({"verify", "--case", "R1", "--p", "2", "--alpha", "1", "--f", "ind:0,0.5,1", "--seed", "7"});
    REQUIRE(r.code == cli::kPass);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j[0]["case_id"] == "R1");
    CHECK(j[0]["seed"] == 7);
    CHECK(j[0]["version"] == kToolVersion);
    CHECK(j[0]["direction"] == "GEQ");
    CHECK(j[0]["pass"] == true);
}

TEST_CASE("random functions are reproducible from the seed") {
    const std::vector<std::string> a = {"verify", "--case", "R1", "--p", "2", "--alpha", "1", "--f", "random", "--seed", "11"};
    const Run x = run(a), y = run(a);
    CHECK(x.code == cli::kPass);
    CHECK(x.out == y.out);
    std::vector<std::string> b = a;
    b.back() = "12";
    CHECK(run(b).out != x.out);
}

TEST_CASE("equality, probe, constants, lorentz and equiv subcommands") {
    CHECK(run({"equality", "--case", "R1", "--p", "2", "--alpha", "1", "--ell", "1", "--c", "0.25,0.5,0.75"}).code ==
          cli::kPass);
    CHECK(run({"equality", "--case", "R1", "--p", "2", "--alpha", "1"}).code == cli::kInput);
    CHECK(run({"probe", "--case", "C2", "--p", "2"}).code == cli::kPass);
    const Run k = run({"constants", "--id", "hardy_classic", "--p", "2"});
    CHECK(k.code == cli::kPass);
    CHECK(nlohmann::json::parse(k.out)["value"] == 4.0);
    CHECK(run({"constants", "--id", "nope"}).code == cli::kInput);
    CHECK(run({"constants", "--id", "dual_pi", "--p", "2"}).code == cli::kInput);
    CHECK(run({"lorentz", "--which", "plain", "--p", "2", "--q", "2", "--f", "step:[1:1]"}).code == cli::kPass);
    CHECK(run({"lorentz", "--which", "dual", "--p", "0.5", "--q", "1", "--f", "ind:0,1,1"}).code == cli::kPass);
    CHECK(run({"lorentz", "--which", "sideways", "--p", "2", "--q", "2", "--f", "step:[1:1]"}).code == cli::kInput);
    CHECK(run({"equiv", "--which", "substitution", "--p", "2", "--f", "logpow:1,0.5,0,l,1"}).code == cli::kPass);
    CHECK(run({"equiv", "--which", "inversion", "--p", "2", "--alpha", "1", "--f", "ind:0,0.5,1"}).code == cli::kPass);
}

TEST_CASE("scan emits one row per grid point in grid order, independent of threads") {
    const std::vector<std::string> base = {"scan", "--case", "R1", "--p", "1.5,2,3", "--alpha", "0.5,1",
                                           "--f", "ind:0,0.5,1", "--format", "csv"};
    std::vector<std::string> one = base, four = base;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    const Run a = run(one), b = run(four);
    CHECK(a.code == cli::kPass);
    CHECK(a.out == b.out);
    std::istringstream lines(a.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 7);
    CHECK(rows[1].find("R1,p>1,1.5,2,0.5,") == 0);
    CHECK(rows[2].find("R1,p>1,1.5,2,1,") == 0);
    CHECK(rows[6].find("R1,p>1,3,2,1,") == 0);
    std::vector<std::string> rnd = base;
    rnd[8] = "random";
    rnd.insert(rnd.end(), {"--seed", "4"});
    const Run ra = run(rnd);
    CHECK(ra.code == cli::kPass);
    CHECK(ra.out.find("cannot parse") == std::string::npos);
    CHECK(run(rnd).out == ra.out);
    // A point outside every regime fails its row, not the scan.
    const Run bad = run({"scan", "--case", "R1", "--p", "2", "--alpha", "1,5", "--f", "ind:0,0.5,1"});
    CHECK(bad.code == cli::kFail);
    const nlohmann::json j = nlohmann::json::parse(bad.out);
    CHECK(j.size() == 2);
    CHECK(j[1]["error"].is_string());
}

TEST_CASE("config file values are overridden by flags") {
    const auto cfg = temp_path("config.json");
    {
        std::ofstream f(cfg);
        f << R"({"case": "R1", "p": 2, "alpha": 1, "f": "ind:0,0.5,1", "format": "json"})";
    }
    const Run a = run({"verify", "--config", cfg.string()});
    CHECK(a.code == cli::kPass);
    CHECK(nlohmann::json::parse(a.out)[0]["params"]["p"] == 2.0);
    const Run b = run({"verify", "--config", cfg.string(), "--p", "3"});
    CHECK(b.code == cli::kPass);
    CHECK(nlohmann::json::parse(b.out)[0]["params"]["p"] == 3.0);
    {
        std::ofstream f(cfg);
        f << R"({"case": "R1", "colour": "blue"})";
    }
    CHECK(run({"verify", "--config", cfg.string()}).code == cli::kInput);
    {
        std::ofstream f(cfg);
        f << "{not json";
    }
    CHECK(run({"verify", "--config", cfg.string()}).code == cli::kInput);
    CHECK(run({"verify", "--config", temp_path("missing.json").string()}).code == cli::kInput);
    std::filesystem::remove(cfg);
}

TEST_CASE("--out writes the report to a file") {
    const auto out = temp_path("out.json");
    const Run r = run({"verify", "--case", "H1", "--p", "2", "--f", "ind:0,1,1", "--out", out.string()});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.empty());
    std::ifstream in(out);
    const nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j[0]["case_id"] == "H1");
    std::filesystem::remove(out);
    const Run bad = run({"verify", "--case", "H1", "--p", "2", "--f", "ind:0,1,1", "--out", "/no/such/dir/out.json"});
    CHECK(bad.code == cli::kNumeric);
}

TEST_CASE("help exits 0") {
    const Run r = run({"--help"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("verify") != std::string::npos);
}
