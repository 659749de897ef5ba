#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aq/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

using namespace aq;
using Json = nlohmann::json;

static std::string write_temp(const std::string& name, const std::string& content)
{
    std::string path = std::string("/tmp/aq_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

static int run_cli(const std::string& args, std::string* output = nullptr)
{
    std::string cmd = std::string(AQ_BIN) + " " + args + " >/tmp/aq_cli_out.txt 2>/tmp/aq_cli_err.txt";
    int rc = std::system(cmd.c_str());
    if (output) {
        std::ifstream in("/tmp/aq_cli_out.txt");
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    return WEXITSTATUS(rc);
}

TEST_CASE("parse_presentation: the documented grammar")
{
    auto P = parse_presentation("p=2; vars: x:1, y:1; rels: x^2+x*y, y^3");
    CHECK(P.p == 2);
    CHECK(P.vars.size() == 2);
    CHECK(P.rels.size() == 2);
    /* canonical graded-lex term order */
    CHECK(P.poly_str(P.rels[0]) == "x*y+x^2");
    CHECK(P.poly_str(P.rels[1]) == "y^3");

    /* comments and blank lines */
    auto Q = parse_presentation("# a comment\np=3\n\nvars: x:2\nrels: x^2 # trailing\n");
    CHECK(Q.p == 3);
    CHECK(Q.vars[0].second == 2);

    /* coefficients reduce mod p */
    auto R = parse_presentation("p=3\nvars: x:1\nrels: 5*x^2-x^2");
    CHECK(R.poly_str(R.rels[0]) == "x^2");
}

TEST_CASE("parse_presentation: rejections with positions")
{
    CHECK_THROWS_WITH_AS(parse_presentation("p=4\nvars: x:1\nrels: x^2"),
                         doctest::Contains("p must be prime"), Error);
    CHECK_THROWS_WITH_AS(parse_presentation("p=2\nvars: x:1\nrels: x^2+1"),
                         doctest::Contains("constant term"), Error);
    CHECK_THROWS_WITH_AS(parse_presentation("p=2\nvars: x:1\nrels: x*z"),
                         doctest::Contains("unknown variable"), Error);
    CHECK_THROWS_AS(parse_presentation("vars: x:1"), Error); /* missing p */
    try {
        parse_presentation("p=2\nvars: x:1\nrels: x^2+?");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
    }
}

TEST_CASE("JSON reports round-trip and are deterministic")
{
    JobConfig cfg;
    cfg.command = "ci-check";
    cfg.input_text = "p=2\nvars: x:1\nrels: x^2";
    cfg.N = 3;
    cfg.W = 6;
    auto r1 = run(cfg);
    auto r2 = run(cfg);
    CHECK(r1.json == r2.json); /* byte-identical */
    auto j = Json::parse(r1.json);
    CHECK(j["schema"] == 1);
    CHECK(Json::parse(j.dump()) == j); /* round-trip */
    CHECK(j["ci"] == true);
}

TEST_CASE("CLI: ci-check on F_2[x]/(x^2)")
{
    auto path = write_temp("x2.aq", "p=2\nvars: x:1\nrels: x^2\n");
    std::string out;
    int rc = run_cli("ci-check --input " + path + " --N 4 --W 8 --format json", &out);
    CHECK(rc == 0);
    auto j = Json::parse(out);
    CHECK(j["ci"] == true);
    CHECK(j["verdict"] == "complete intersection");
    /* H^Q table (1; 1; 0) with weights */
    bool saw01 = false, saw12 = false;
    for (auto& e : j["engine_hq"]) {
        if (e["s"] == 0 && e["w"] == 1 && e["dim"] == 1)
            saw01 = true;
        if (e["s"] == 1 && e["w"] == 2 && e["dim"] == 1)
            saw12 = true;
        CHECK(e["s"] != 2);
    }
    CHECK(saw01);
    CHECK(saw12);
}

TEST_CASE("CLI: em-series matches the spec example")
{
    std::string out;
    int rc = run_cli("em-series --p 2 --q 1 --n 2 --T 10 --format json", &out);
    CHECK(rc == 0);
    auto j = Json::parse(out);
    std::vector<int> expect = {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1};
    REQUIRE(j["coefficients"].size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(j["coefficients"][i] == expect[i]);
}

TEST_CASE("CLI: homology of F_p with no variables exits 0 with empty tables")
{
    auto path = write_temp("triv.aq", "p=5\nvars:\nrels:\n");
    std::string out;
    int rc = run_cli("homology --input " + path + " --format json", &out);
    CHECK(rc == 0);
    auto j = Json::parse(out);
    CHECK(j["hq"].empty());
    CHECK(j["oracle_agreement"] == true);
}

TEST_CASE("CLI: domain errors exit 1")
{
    auto path = write_temp("badp.aq", "p=4\nvars: x:1\nrels: x^2\n");
    CHECK(run_cli("ci-check --input " + path) == 1);
    CHECK(run_cli("ci-check --input /nonexistent/file") == 1);
    auto path2 = write_temp("bigrel.aq", "p=2\nvars: x:1\nrels: x^9\n");
    CHECK(run_cli("homology --input " + path2 + " --W 6") == 1);
}

TEST_CASE("CLI: a corrupted face matrix exits 2")
{
    auto path = write_temp("x2b.aq", "p=2\nvars: x:1\nrels: x^2\n");
    CHECK(run_cli("homology --input " + path + " --self-test-corrupt") == 2);
}

TEST_CASE("CLI: byte-identical reports across runs")
{
    auto path = write_temp("det.aq", "p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2\n");
    std::string a, b;
    CHECK(run_cli("ci-check --input " + path + " --N 3 --W 6 --format json", &a) == 0);
    CHECK(run_cli("ci-check --input " + path + " --N 3 --W 6 --format json", &b) == 0);
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("CLI: suspend and envelope run end to end")
{
    auto path = write_temp("x2c.aq", "p=2\nvars: x:1\nrels: x^2\n");
    std::string out;
    CHECK(run_cli("suspend --input " + path + " --N 4 --W 6 --format json", &out) == 0);
    auto j = Json::parse(out);
    CHECK(j["hq_shift_matches"] == true);

    CHECK(run_cli("envelope --input " + path + " --N 4 --W 6 --format json", &out) == 0);
    auto e = Json::parse(out);
    REQUIRE(e["steps"].size() >= 1);
    CHECK(e["steps"][0]["recognized_sphere"]["n"] == 1);
    CHECK(e["steps"][0]["serre_holds"] == true);
}

TEST_CASE("CLI: the envelope chain of the fat point reaches a recognized sphere")
{
    auto path = write_temp("fat.aq", "p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2\n");
    std::string out;
    CHECK(run_cli("envelope --input " + path + " --N 4 --W 6 --format json", &out) == 0);
    auto j = Json::parse(out);
    REQUIRE(j["steps"].size() == 3);
    CHECK(j["steps"][0]["recognized_sphere"].is_null());
    CHECK(j["steps"][2]["recognized_sphere"]["n"] == 3);
    CHECK(j["steps"][2]["recognized_sphere"]["dim"] == 3);
    CHECK(j["steps"][2]["recognized_sphere"]["pi_match"] == true);
    /* the top step is a simple extension with n >= 2: the series split */
    CHECK(j["steps"][2]["serre_equality"] == true);
    CHECK(j["steps"][0]["serre_equality"] == false);
}

TEST_CASE("CLI: an oversized explicit range degrades to a domain error")
{
    auto path = write_temp("fatW.aq", "p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2\n");
    CHECK(run_cli("suspend --input " + path + " --W 12") == 1);
}

TEST_CASE("CLI: phi reports the ratio trend")
{
    std::string out;
    CHECK(run_cli("phi --p 2 --q 1 --n 3 --tau 6,8,10,12 --format json", &out) == 0);
    auto j = Json::parse(out);
    CHECK(j["increasing"] == true);
    double fr = j["final_ratio"];
    CHECK(fr > 0.5);
    CHECK(fr < 1.1);
}
