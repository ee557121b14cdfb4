#pragma once

#include "icr/io.hpp"
#include "icr/limits.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace icr {

/// Deliberate corruption used to check that the harnesses can fail.
enum class Fault { None, Radius, LowerC };

struct Config {
  std::uint64_t seed = 0;
  std::size_t n_max = 3;
  std::size_t m_max = 3;
  Rat tol = pow2_neg(16);

  std::size_t set_instances = 1000;      // support laws, separation, inclusion
  std::size_t oracle_instances = 200;    // per set operation
  std::size_t graph_mappings = 100;
  std::size_t hull_mappings = 10;
  std::size_t hull_samples = 20;
  std::size_t hull_refinements = 5;
  std::size_t t1_mappings = 50;
  std::size_t t1_points = 20;
  std::size_t t1_graph_points = 50;
  std::size_t t2_mappings = 20;
  std::size_t t2_samples = 20;
  std::size_t t2_converse = 50;
  std::size_t bridge_instances = 200;
  std::size_t limit_instances = 100;
  unsigned truncation = 256;
  std::size_t regularity_points = 100;
  unsigned depth = 64;
  std::size_t lipschitz_instances = 20;

  Fault fault = Fault::None;
};

Json to_json(const Config& c);
/// Missing fields keep their defaults; unknown fields and out-of-range
/// values raise ParseError.
Config config_from_json(const Json& j);

struct Case {
  std::string id;
  Verdict verdict = Verdict::Pass;
  std::size_t checks = 0;
  std::size_t failures = 0;
  Json details = Json::object();
  /// First few failing inputs, in generation order.
  std::vector<Json> counterexamples;
};

struct Report {
  std::string suite;
  Config config;
  std::vector<Case> cases;

  bool pass() const;
  Json to_json() const;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
Report run_suite(const std::string& name, const Config& cfg);
inline int exit_status(const Report& r) { return r.pass() ? 0 : 1; }

}  // namespace icr
