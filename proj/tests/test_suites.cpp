#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "klab/errors.hpp"
#include "klab/suites.hpp"

using namespace klab;

namespace {

int run_tool(const std::string& args, std::string* out_path = nullptr) {
    static int counter = 0;
    const std::string redirect = "/tmp/klab_test_out_" + std::to_string(counter++);
    const std::string cmd =
        std::string(KLAB_TOOL_PATH) + " " + args + " >" + redirect + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (out_path != nullptr) *out_path = redirect;
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_wall_time(const std::string& report) {
    auto j = nlohmann::ordered_json::parse(report);
    j.erase("wall_time_ms");
    return j.dump(2);
}

} // namespace

TEST_CASE("registry is complete") {
    const auto& reg = suite_registry();
    CHECK(reg.size() == 12);
    for (const char* id :
         {"geodesic-circles", "complex-lines", "kahler", "bilinearity", "exp-jet",
          "proportionality", "rectifier", "curvature", "gram", "momentum",
          "family-suspension", "family-exterior"}) {
        bool found = false;
        for (const auto& info : reg) found = found || info.id == id;
        CHECK_MESSAGE(found, id);
    }
}

TEST_CASE("config validation") {
    SuiteConfig cfg;
    cfg.suite = "does-not-exist";
    CHECK_THROWS_AS(run_suite(cfg), PreconditionError);
    cfg.suite = "kahler";
    cfg.format = "xml";
    CHECK_THROWS_AS(run_suite(cfg), PreconditionError);
    cfg.format = "json";
    cfg.metric_id = "not-a-metric";
    CHECK_THROWS_AS(run_suite(cfg), PreconditionError);
}

TEST_CASE("flat geodesics report lines") {
    SuiteConfig cfg;
    cfg.suite = "geodesic-circles";
    cfg.metric_id = "euclidean";
    cfg.samples = 5;
    const VerificationReport rep = run_suite(cfg);
    CHECK(rep.all_pass());
    CHECK(rep.cases.size() == 5);
    for (const CaseResult& c : rep.cases) {
        bool saw_line = false;
        for (const auto& [k, v] : c.params) saw_line = saw_line || (k == "kind" && v == "line");
        CHECK(saw_line);
    }
}

TEST_CASE("counterexample fields fail with both defects reported") {
    SuiteConfig cfg;
    cfg.suite = "kahler";
    cfg.metric_id = "testfield:nonkahler";
    cfg.samples = 4;
    const VerificationReport rep = run_suite(cfg);
    CHECK(!rep.all_pass());
    for (const CaseResult& c : rep.cases) {
        CHECK(!c.pass);
        double kd = 0.0, bd = 0.0;
        for (const auto& [k, v] : c.residuals) {
            if (k == "kahler_defect") kd = v;
            if (k == "complex_bilinearity_defect") bd = v;
        }
        CHECK(kd > 1e-6);
        CHECK(bd > 1e-6);
    }
}

TEST_CASE("reports are deterministic given the seed") {
    SuiteConfig cfg;
    cfg.suite = "proportionality";
    cfg.metric_id = "fubini:-0.5";
    cfg.samples = 4;
    cfg.seed = 99;
    const std::string a = run_suite(cfg).to_json(false);
    const std::string b = run_suite(cfg).to_json(false);
    CHECK(a == b);
    CHECK(a.find("wall_time") == std::string::npos);

    cfg.seed = 100;
    CHECK(run_suite(cfg).to_json(false) != a);
}

TEST_CASE("csv report shape") {
    SuiteConfig cfg;
    cfg.suite = "bilinearity";
    cfg.metric_id = "euclidean";
    cfg.samples = 3;
    cfg.format = "csv";
    const std::string csv = run_suite(cfg).to_csv();
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "case,status,residuals");
    std::getline(is, line);
    CHECK(line.find("case-000,pass,complex_bilinearity_defect=") == 0);
}

TEST_CASE("cli exit codes") {
    CHECK(run_tool("verify geodesic-circles --metric euclidean --samples 4 --seed 3") == 0);
    CHECK(run_tool("verify kahler --metric testfield:nonkahler --samples 3") == 1);
    CHECK(run_tool("verify no-such-suite") == 2);
    CHECK(run_tool("verify kahler --metric bogus --samples 2") == 2);
    CHECK(run_tool("--definitely-not-a-flag") == 2);
    CHECK(run_tool("") == 2);
}

TEST_CASE("cli reports are byte-identical modulo the timing field") {
    std::string out1, out2;
    const std::string args =
        "verify bilinearity --metric fubini:1 --samples 3 --seed 11";
    REQUIRE(run_tool(args, &out1) == 0);
    REQUIRE(run_tool(args, &out2) == 0);
    CHECK(strip_wall_time(slurp(out1)) == strip_wall_time(slurp(out2)));
}

TEST_CASE("cli trajectory export") {
    std::string out;
    REQUIRE(run_tool("export trajectory --metric fubini:1 --seed 5 --samples 32", &out) == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("t,x0,x1,x2,x3,v0,v1,v2,v3\n", 0) == 0);
    int lines = 0;
    for (char ch : csv) lines += ch == '\n' ? 1 : 0;
    CHECK(lines == 34); // header + 33 samples

    REQUIRE(run_tool("export trajectory --metric euclidean --p0 0,0,0,0 --v0 1,0,0,0 "
                     "--samples 16 --T 1",
                     &out) == 0);
    const std::string flat = slurp(out);
    CHECK(flat.find("\n1,1,0,0,0,1,0,0,0\n") != std::string::npos);

    CHECK(run_tool("export trajectory --family no-such-family") == 2);
    REQUIRE(run_tool("export trajectory --family exterior-ball --seed 2 --samples 64", &out) ==
            0);
    CHECK(slurp(out).rfind("t,", 0) == 0);
    REQUIRE(run_tool("export trajectory --family suspension:poincare --seed 2 --samples 64",
                     &out) == 0);
    CHECK(slurp(out).rfind("t,", 0) == 0);
}

TEST_CASE("cli report merge") {
    std::string r1, r2, merged;
    REQUIRE(run_tool("verify bilinearity --metric euclidean --samples 2 --out /tmp/klab_r1.json",
                     &r1) == 0);
    REQUIRE(run_tool("verify kahler --metric euclidean --samples 2 --out /tmp/klab_r2.json",
                     &r2) == 0);
    REQUIRE(run_tool("report merge /tmp/klab_r1.json /tmp/klab_r2.json", &merged) == 0);
    const auto j = nlohmann::json::parse(slurp(merged));
    CHECK(j["schema"] == "1");
    CHECK(j["reports"].size() == 2);
    CHECK(j["summary"]["cases"] == 4);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(run_tool("report merge /tmp/does_not_exist.json") == 2);
}

TEST_CASE("cli config file with flag override") {
    {
        std::ofstream cfg("/tmp/klab_cfg.ini");
        cfg << "metric=euclidean\nsamples=4\nseed=21\n";
    }
    std::string out;
    REQUIRE(run_tool("verify bilinearity --config /tmp/klab_cfg.ini", &out) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["config"]["metric"] == "euclidean");
    CHECK(j["config"]["samples"] == "4");
    REQUIRE(run_tool("verify bilinearity --config /tmp/klab_cfg.ini --samples 2", &out) == 0);
    j = nlohmann::json::parse(slurp(out));
    CHECK(j["config"]["samples"] == "2");
}
