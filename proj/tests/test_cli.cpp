#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "abcalc/cli.hpp"
#include "abcalc/errors.hpp"
#include "abcalc/expr.hpp"
#include "abcalc/json_io.hpp"
#include "oracles.hpp"

using namespace abcalc;
using abcalc::testing::Rng;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_data = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_data);
  int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "cli_input_" + name + ".json";
  std::ofstream file(path);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("expression parsing") {
  NcElement b2 = evaluate(parse_expression("a*b - b*a"));
  NcElement expected;
  expected.add_term(1, 0, 2);
  CHECK(b2 == expected);

  NcElement quad = evaluate(parse_expression("(a - 2*b)*(a - b)"));
  CHECK(render(quad) == "a^2 - 3*a*b + 4*b^2");

  try {
    parse_expression("a*");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(!e.expected().empty());
  }

  // series literal is an exact polynomial in b
  NcElement s = evaluate(parse_expression("S[1,-1/2,3]"));
  CHECK(s.coeff(0, 0) == 1);
  CHECK(s.coeff(0, 1) == Rational(-1, 2));
  CHECK(s.coeff(0, 2) == 3);

  // b^-k atoms need Laurent mode
  CHECK_THROWS_AS(evaluate(parse_expression("b^-2")), LaurentNotAllowed);
  NcElement binv = evaluate(parse_expression("b^-2"), true);
  CHECK(binv.coeff(0, -2) == 1);
  CHECK(evaluate(parse_expression("b^-1^3"), true).coeff(0, -3) == 1);
}

TEST_CASE("render and parse round trip") {
  Rng rng(4242);
  for (int trial = 0; trial < 80; ++trial) {
    bool laurent = trial % 2 == 0;
    NcElement x(laurent);
    int terms = rng.uniform(0, 6);
    for (int t = 0; t < terms; ++t) {
      x.add_term(rng.rational(9, 7), rng.uniform(0, 5),
                 rng.uniform(laurent ? -5 : 0, 5));
    }
    NcElement back = evaluate(parse_expression(render(x)), laurent);
    CHECK(back == x);
  }
}

TEST_CASE("normalize command") {
  CliRun r = run({"normalize", "b*a"});
  CHECK(r.code == 0);
  CHECK(r.out == "a*b - b^2\n");

  CliRun stdin_run = run({"normalize", "-"}, "b*a^2");
  CHECK(stdin_run.code == 0);
  CHECK(stdin_run.out == "a^2*b - 2*a*b^2 + 2*b^3\n");

  CliRun bad = run({"normalize", "a*"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset 2") != std::string::npos);

  CliRun laurent = run({"normalize", "--laurent", "b^-1*a"});
  CHECK(laurent.code == 0);
  CHECK(laurent.out == "a*b^-1 + 1\n");

  CliRun refused = run({"normalize", "b^-1*a"});
  CHECK(refused.code == 3);

  CliRun capped = run({"--laurent-window", "2", "normalize", "--laurent", "b^-3"});
  CHECK(capped.code == 4);
}

TEST_CASE("bpoly, belem, divide, exact-seq commands") {
  CliRun bp = run({"bpoly", "(a - 2*b)*(a - b)"});
  CHECK(bp.code == 0);
  CHECK(bp.out.find("(x + 1)^2") != std::string::npos);

  CliRun bf = run({"bpoly", "--factors", "2,1"});
  CHECK(bf.code == 0);
  CHECK(bf.out.find("(x + 1)^2") != std::string::npos);

  CliRun be = run({"belem", "x^2 + 2*x + 1"});
  CHECK(be.code == 0);
  CHECK(be.out == "a^2 - 3*a*b + 4*b^2\n");

  CliRun dv = run({"divide", "(a - 3*b)*(a - 2*b)*(a - b)", "(a - 2*b)*(a - b)"});
  CHECK(dv.code == 0);
  CHECK(dv.out.find("a - 3*b") != std::string::npos);

  CliRun nd = run({"divide", "a^2", "a - b"});
  CHECK(nd.code == 3);
  CHECK(nd.err.find("remainder: 2*b^2") != std::string::npos);

  CliRun es = run({"exact-seq", "--bf", "x + 2", "--bh", "x + 1"});
  CHECK(es.code == 0);
  CHECK(es.out == "(x + 1)^2\n");
}

TEST_CASE("gm command output carries the derivation") {
  std::string path = write_temp(
      "gm",
      R"({"monomials": [[1,2,0,0],[2,1,0,0],[0,0,1,3],[0,0,3,1]],)"
      R"( "coefficients": ["1","1","1","1"],)"
      R"( "distinguished": [1,1,1,1], "form": [0,0,0,0]})");
  CliRun text = run({"gm", path});
  CHECK(text.code == 0);
  CHECK(text.out.find("N = 12") != std::string::npos);
  CHECK(text.out.find("(x + 7/6)") != std::string::npos);

  CliRun json_run = run({"--format", "json", "gm", path});
  CHECK(json_run.code == 0);
  Json j = Json::parse(json_run.out);
  CHECK(j.at("closure_degree") == 12);
  CHECK(j.at("rhs_coeff") == "-1/6");
  CHECK(j.at("alpha") == Json::array({"1/3", "1/3", "1/4", "1/4"}));

  // byte-identical on repeat
  CliRun again = run({"--format", "json", "gm", path});
  CHECK(again.out == json_run.out);
}

TEST_CASE("saturate command accepts presentations and modules") {
  std::string pres = write_temp(
      "pres", R"({"lambdas": ["2","1"], "series": [["1","1"]]})");
  CliRun r = run({"saturate", pres});
  CHECK(r.code == 0);
  CHECK(r.out.find("(x + 1)^2") != std::string::npos);

  CliRun capped = run({"--max-iter", "0", "saturate", pres});
  CHECK(capped.code == 4);

  std::string module = write_temp(
      "mod",
      R"({"rank": 1, "precision": 16, "a_matrix": [[["0","5/2"]]]})");
  CliRun m = run({"saturate", module});
  CHECK(m.code == 0);
  CHECK(m.out.find("(x + 5/2)") != std::string::npos);
}

TEST_CASE("from-pi command") {
  std::string pres = write_temp(
      "frompi", R"({"lambdas": ["2","1"], "series": [["1","1/2"]]})");
  CliRun r = run({"from-pi", pres});
  CHECK(r.code == 0);
  CHECK(r.out.find("a^2 - 3*a*b + 4*b^2") != std::string::npos);
  CHECK(r.out.find("(x + 1)^2") != std::string::npos);
  CHECK(r.out.find("verdict: geometric") != std::string::npos);
}

TEST_CASE("poles command runs scripts") {
  std::string input = write_temp(
      "poles",
      R"({"ledger": {"q": 1, "cap": 4, "xi_class": "-7/10",)"
      R"( "family": {"0": [{"loc": "-7/10", "ord": 2, "exact": true}]}},)"
      R"( "script": [{"op": "linear", "lambda0": "7/10"}]})");
  CliRun r = run({"poles", input});
  CHECK(r.code == 0);
  CHECK(r.out.find("maximal pole: -17/10 of order 1 at h = 1") !=
        std::string::npos);

  CliRun j = run({"--format", "json", "poles", input});
  Json parsed = Json::parse(j.out);
  CHECK(parsed.at("maximal_pole").at("loc") == "-17/10");
}

TEST_CASE("json schema loaders reject malformed input") {
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"series": []})")),
                  SchemaError);
  CHECK_THROWS_AS(
      presentation_from_json(Json::parse(R"({"lambdas": [2.5]})")),
      SchemaError);
  CHECK_THROWS_AS(
      presentation_from_json(Json::parse(R"({"lambdas": ["1/0"]})")),
      SchemaError);
  CHECK_THROWS_AS(
      abmodule_from_json(Json::parse(R"({"rank": 1})")), SchemaError);
  CHECK_THROWS_AS(
      monomial_input_from_json(Json::parse(R"({"monomials": [[1,2],[1]]})")),
      Error);
  CHECK_THROWS_AS(script_from_json(Json::parse(R"([{"op": "spin"}])")),
                  SchemaError);
  CHECK_THROWS_AS(
      family_from_json(Json::parse(
          R"({"q": 1, "cap": 2, "xi_class": "-1/2",
              "family": {"0": [{"loc": "1/2", "ord": 1}]}})")),
      Error);
}

TEST_CASE("presentation json round trip") {
  Json j = Json::parse(R"({"lambdas": ["2","1"], "series": [["1","1/2"]]})");
  FrescoPresentation p = presentation_from_json(j);
  CHECK(presentation_to_json(p) == j);

  AbModulePresentation m = a_matrix_from_presentation(p, 8);
  Json mj = abmodule_to_json(m);
  AbModulePresentation back = abmodule_from_json(mj);
  CHECK(back.rank == m.rank);
  CHECK(back.a_matrix[1][1].coeff(1) == m.a_matrix[1][1].coeff(1));
}

TEST_CASE("unknown flags and missing subcommands fail with exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"normalize"}).code == 2);
}
