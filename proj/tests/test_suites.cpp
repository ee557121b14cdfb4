#include "icr/suites.hpp"

#include <doctest.h>

#include <algorithm>

using namespace icr;

namespace {

Config small() {
  Config c;
  c.set_instances = 40;
  c.oracle_instances = 5;
  c.graph_mappings = 12;
  c.hull_mappings = 2;
  c.hull_samples = 5;
  c.t1_mappings = 4;
  c.t1_points = 3;
  c.t1_graph_points = 10;
  c.t2_mappings = 2;
  c.t2_samples = 4;
  c.t2_converse = 4;
  c.bridge_instances = 10;
  c.limit_instances = 8;
  c.regularity_points = 6;
  c.lipschitz_instances = 2;
  return c;
}

const Case* find(const Report& r, const std::string& id) {
  auto it = std::find_if(r.cases.begin(), r.cases.end(), [&](const Case& c) { return c.id == id; });
  return it == r.cases.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("config parsing") {
  Config c = config_from_json(parse_text(R"({"seed": 7, "tol": "1/1024", "fault": "lower-c"})"));
  CHECK(c.seed == 7);
  CHECK(c.tol == Rat(1, 1024));
  CHECK(c.fault == Fault::LowerC);
  CHECK(c.set_instances == Config{}.set_instances);
  CHECK_THROWS_AS(config_from_json(parse_text(R"({"sead": 7})")), ParseError);
  CHECK_THROWS_AS(config_from_json(parse_text(R"({"n_max": 9})")), ParseError);
  CHECK_THROWS_AS(config_from_json(parse_text(R"({"tol": "0"})")), ParseError);
  CHECK_THROWS_AS(config_from_json(parse_text(R"({"fault": "everything"})")), ParseError);
  CHECK(dump(to_json(config_from_json(to_json(small())))) == dump(to_json(small())));
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("nonsense", small()), std::invalid_argument);
  CHECK(suite_names().back() == "all");
}

TEST_CASE("reports are deterministic and sorted") {
  Report a = run_suite("theorem1", small()), b = run_suite("theorem1", small());
  CHECK(dump(a.to_json()) == dump(b.to_json()));
  CHECK(std::is_sorted(a.cases.begin(), a.cases.end(), [](const Case& x, const Case& y) { return x.id < y.id; }));
  Config other = small();
  other.seed = 1;
  CHECK(dump(run_suite("theorem1", other).to_json()) != dump(a.to_json()));
}

TEST_CASE("theorem 1 with scalar dimensions passes and the fault is caught") {
  Config c = small();
  c.n_max = c.m_max = 1;
  Report r = run_suite("theorem1", c);
  CHECK(r.pass());
  CHECK(exit_status(r) == 0);
  c.fault = Fault::Radius;
  Report bad = run_suite("theorem1", c);
  CHECK_FALSE(bad.pass());
  CHECK(exit_status(bad) == 1);
  CHECK(bad.to_json()["verdict"] == "FAIL");
}

TEST_CASE("theorem 2 fault injection fails the report") {
  Config c = small();
  c.fault = Fault::LowerC;
  Report bad = run_suite("theorem2", c);
  CHECK_FALSE(bad.pass());
  const Case* incl = find(bad, "forward-inclusion");
  REQUIRE(incl);
  CHECK(incl->verdict == Verdict::Fail);
  CHECK_FALSE(incl->counterexamples.empty());
}

TEST_CASE("sigma-props carries the superadditivity counterexample") {
  Report r = run_suite("sigma-props", small());
  const Case* c = find(r, "superadditivity-counterexample");
  REQUIRE(c);
  CHECK(c->verdict == Verdict::Pass);
  CHECK(c->details["sigma_A+B"]["exact"] == "1");
  CHECK(c->details["sigma_A"]["exact"] == "0");
}

TEST_CASE("regularity records the step threshold as an expected failure") {
  Report r = run_suite("regularity", small());
  const Case* c = find(r, "step-threshold-lsc");
  REQUIRE(c);
  CHECK(c->verdict == Verdict::ExpectedFail);
  Json j = r.to_json();
  CHECK(j["summary"]["expected_fail"] == 1);
}
