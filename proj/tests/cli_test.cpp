#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grtoda/cli.hpp"

using namespace grtoda;

namespace {
int run(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::vector<const char*> argv{"grtoda"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

nlohmann::json load_schema(const std::string& name) {
    std::ifstream in("schemas/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}
} // namespace

TEST_CASE("config parsing") {
    RunConfig cfg;
    apply_config_line(cfg, "m=1");
    apply_config_line(cfg, "n=2");
    apply_config_line(cfg, "hbar=1");
    cfg.validate();
    CHECK(cfg.m == 1);
    CHECK(cfg.n == 2);
    CHECK(cfg.hbar == 1.0);

    RunConfig bad;
    apply_config_line(bad, "m=3");
    apply_config_line(bad, "n=3");
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    CHECK_THROWS_AS(apply_config_line(cfg, "unknown_key=1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_line(cfg, "m=abc"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_line(cfg, "nonsense"), std::invalid_argument);

    RunConfig eps;
    apply_config_line(eps, "epsilon=1");
    CHECK(eps.vs_sign() == -1);

    apply_config_line(cfg, "lambda=0.5,-0.5");
    CHECK(cfg.lambda == std::vector<double>{0.5, -0.5});
}

TEST_CASE("config file loading and flag override") {
    {
        std::ofstream f("/tmp/grtoda_test.cfg");
        f << "# comment\n" << "m=1\n" << "n=3\n" << "hbar=2\n";
    }
    RunConfig cfg = load_config("/tmp/grtoda_test.cfg");
    CHECK(cfg.n == 3);
    CHECK(cfg.hbar == 2.0);
    std::string out;
    int rc = run({"phase", "--config", "/tmp/grtoda_test.cfg", "--n", "2", "--emit", "json"}, &out);
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["n"] == 2); // flag overrides file
}

TEST_CASE("integral json validates against the shipped schema") {
    std::string out;
    int rc = run({"integral", "--m", "1", "--n", "2", "--lambda", "0,0", "--hbar", "1", "--x",
                  "0", "--tol", "1e-8", "--emit", "json"},
                 &out);
    REQUIRE(rc == 0);
    auto j = nlohmann::json::parse(out);
    std::string error;
    CHECK(validate_against_schema(j, load_schema("integral_result.schema.json"), &error));
    CHECK(error.empty());
    CHECK(std::abs(j["value"]["re"].get<double>() - 0.22778774549906685) < 1e-8);
}

TEST_CASE("verify subcommands succeed and emit valid json") {
    std::string out;
    CHECK(run({"verify", "whittaker", "--m", "1", "--n", "2", "--emit", "json"}, &out) == 0);
    auto j = nlohmann::json::parse(out);
    std::string error;
    CHECK(validate_against_schema(j, load_schema("character_table.schema.json"), &error));

    CHECK(run({"verify", "paths", "--n", "3", "--emit", "json"}, &out) == 0);
    auto jr = nlohmann::json::parse(out);
    CHECK(validate_against_schema(jr, load_schema("relation_report.schema.json"), &error));

    CHECK(run({"verify", "boxes", "--m", "2", "--n", "4"}, &out) == 0);
    CHECK(run({"verify", "chevalley", "--n", "3"}, &out) == 0);
}

TEST_CASE("graph dot output") {
    std::string out;
    CHECK(run({"graph", "--m", "2", "--n", "4", "--format", "dot"}, &out) == 0);
    CHECK(out.find("digraph") != std::string::npos);
    // one node line per interior vertex
    size_t count = 0, pos = 0;
    while ((pos = out.find("[label=\"x_{", pos)) != std::string::npos) { ++count; ++pos; }
    CHECK(count == 4 + 1); // interior vertices + source
    CHECK(run({"graph", "--gz", "--n", "3"}, &out) == 0);
    CHECK(out.find("x_{3,1}") != std::string::npos);
}

TEST_CASE("usage errors give nonzero exit") {
    std::string out, err;
    CHECK(run({"integral", "--m", "3", "--n", "3", "--lambda", "0,0,0"}, &out, &err) != 0);
    CHECK(run({"verify", "nonsense", "--n", "3"}, &out, &err) == 2);
    CHECK(run({"frobnicate"}, &out, &err) != 0);
}

TEST_CASE("report: exit status reflects injected failure") {
    std::string out;
    int rc = run({"report", "--max-n", "3", "--emit", "json"}, &out);
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(out);
    std::string error;
    CHECK(validate_against_schema(j, load_schema("conformance_report.schema.json"), &error));
    // every check id appears exactly once
    std::set<std::string> ids;
    for (const auto& c : j["checks"]) {
        std::string id = c["check_id"];
        CHECK(ids.insert(id).second);
    }
    CHECK(ids.count("whittaker-verification") == 1);
    CHECK(ids.count("qh-comparison") == 1);

    int rc2 = run({"report", "--max-n", "3", "--inject-fail", "bessel-value"}, &out);
    CHECK(rc2 == 1);
}

TEST_CASE("epsilon flag flips the sign symbol in outputs") {
    std::string out0, out1;
    CHECK(run({"lax", "--m", "1", "--n", "2", "--charpoly", "--emit", "text"}, &out0) == 0);
    CHECK(run({"lax", "--m", "1", "--n", "2", "--charpoly", "--emit", "text", "--epsilon", "1"},
              &out1) == 0);
    CHECK(out0.find("-1*q") != std::string::npos);
    CHECK(out1.find("q") != std::string::npos);
    CHECK(out0 != out1);
}

TEST_CASE("numeric range guards") {
    std::string out, err;
    // m(n-m) > 4 is rejected for numeric evaluation
    CHECK(run({"integral", "--m", "2", "--n", "5", "--lambda", "0,0,0,0,0"}, &out, &err) == 2);
    CHECK(err.find("m(n-m)") != std::string::npos);
}
