#include <doctest.h>

#include "forge/cli.hpp"
#include "forge/poly_text.hpp"

using namespace forge;

TEST_CASE("structure descriptors parse and validate") {
  Json torus = Json::parse(R"({"kind":"torus","n":3,"lambda":[[0,1,1],[-1,0,1],[-1,-1,0]]})");
  auto s = parse_structure(torus);
  CHECK(s.kind_name() == "torus");
  CHECK(s.arity() == 3);

  Json potential = Json::parse(R"({"kind":"potential","omega":"x^5+y^5+z^5"})");
  CHECK(parse_structure(potential).kind_name() == "potential");

  Json not_skew = Json::parse(R"({"kind":"torus","n":2,"lambda":[[0,1],[1,0]]})");
  CHECK_THROWS_AS(static_cast<void>(parse_structure(not_skew)), ForgeError);

  Json inhomogeneous = Json::parse(R"({"kind":"potential","omega":"x^2+y"})");
  CHECK_THROWS_AS(static_cast<void>(parse_structure(inhomogeneous)), ForgeError);

  Json unknown_field =
      Json::parse(R"({"kind":"torus","n":2,"lambda":[[0,1],[-1,0]],"extra":1})");
  CHECK_THROWS_AS(static_cast<void>(parse_structure(unknown_field)), ForgeError);
}

TEST_CASE("bracket command") {
  Json desc = Json::parse(R"({
    "command": "bracket",
    "structure": {"kind":"torus","n":2,"lambda":[[0,"q"],["-q",0]]},
    "operands": {"f":"x1","g":"x2"}
  })");
  auto res = run_descriptor(desc);
  CHECK(res.exit_code == 0);
  CHECK(res.report["status"] == "value");
  CHECK(res.report["payload"]["result"] == "q*x1*x2");
}

TEST_CASE("classification command on the index-2 endomorphism") {
  Json desc = Json::parse(R"({
    "command": "classify",
    "structure": {"kind":"torus","n":3,"lambda":[[0,1,1],[-1,0,1],[-1,-1,0]]},
    "operands": {"images":["x1^3*x2^-2*x3^2","x1*x3","x3"]}
  })");
  auto res = run_descriptor(desc);
  CHECK(res.exit_code == 0);
  CHECK(res.report["payload"]["class"] == "injective_not_surjective");
  CHECK(res.report["payload"]["index"] == 2);
  CHECK(res.report["payload"]["missing"] == "x2");
}

TEST_CASE("simple command uses exit code 1 for a negative verdict") {
  Json not_simple = Json::parse(R"({
    "command": "simple",
    "structure": {"kind":"torus","n":3,"lambda":[[0,1,1],[-1,0,1],[-1,-1,0]]}
  })");
  auto res = run_descriptor(not_simple);
  CHECK(res.exit_code == 1);
  CHECK(res.report["status"] == "fail");
  CHECK(res.report["payload"]["witness"] == "x1*x2^-1*x3");
}

TEST_CASE("simple command passes on the generic rank-two torus") {
  Json desc = Json::parse(R"({
    "command": "simple",
    "structure": {"kind":"torus","n":2,"lambda":[[0,"q"],["-q",0]]}
  })");
  auto res = run_descriptor(desc);
  CHECK(res.exit_code == 0);
  CHECK(res.report["payload"]["simple"] == true);
}

TEST_CASE("schema violations exit with code 2") {
  auto res = run_descriptor(Json::parse(R"({"command":"nope"})"));
  CHECK(res.exit_code == 2);
  CHECK(res.report["status"] == "error");

  auto res2 = run_descriptor(Json::parse(R"({"command":"aut-bound","operands":{"d":2}})"));
  CHECK(res2.exit_code == 2);

  auto res3 = run_descriptor(
      Json::parse(R"({"command":"aut-bound","operands":{"d":5},"bogus":true})"));
  CHECK(res3.exit_code == 2);
}

TEST_CASE("aut-bound values") {
  auto res = run_descriptor(Json::parse(R"({"command":"aut-bound","operands":{"d":6}})"));
  CHECK(res.exit_code == 0);
  CHECK(res.report["payload"]["value"] == 2268);
}

TEST_CASE("reports are byte-deterministic") {
  Json desc = Json::parse(R"({
    "command": "gr-check",
    "structure": {"kind":"potential-quotient","omega":"x^5+y^5+z^5","xi":1},
    "options": {"degree_bound":4,"trials":25,"seed":9}
  })");
  auto a = run_descriptor(desc);
  auto b = run_descriptor(desc);
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("polynomial payloads re-parse to equal values") {
  Json desc = Json::parse(R"({
    "command": "bracket",
    "structure": {"kind":"potential","omega":"x^3+y^3+z^3"},
    "operands": {"f":"x+2*y","g":"y*z"}
  })");
  auto res = run_descriptor(desc);
  REQUIRE(res.exit_code == 0);
  std::string rendered = res.report["payload"]["result"].get<std::string>();
  auto s = parse_structure(desc["structure"]);
  LaurentPoly direct = bracket(s, parse_poly("x+2*y", 3), parse_poly("y*z", 3));
  CHECK(parse_poly(rendered, 3) == direct);
}

TEST_CASE("option overrides rewire the run") {
  Json desc = Json::parse(R"({
    "command": "grading",
    "structure": {"kind":"potential","omega":"x^4+y^4+z^4"}
  })");
  Json overrides = Json::object();
  overrides["degree_bound"] = 3;
  auto res = run_descriptor(desc, overrides);
  CHECK(res.exit_code == 0);
  CHECK(res.report["payload"]["max_shift"] == 1);
  CHECK(res.report["payload"]["homogeneous"] == true);
}
