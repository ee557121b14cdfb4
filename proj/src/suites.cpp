#include "suite_common.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace icr {

namespace {

const char* fault_name(Fault f) {
  switch (f) {
    case Fault::None: return "none";
    case Fault::Radius: return "radius";
    case Fault::LowerC: return "lower-c";
  }
  return "none";
}

template <class T>
void read_count(const Json& j, const char* key, T& out, T lo, T hi) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number_unsigned()) throw ParseError(std::string("/") + key + ": expected a nonnegative integer");
  auto v = it->get<std::uint64_t>();
  if (v < static_cast<std::uint64_t>(lo) || v > static_cast<std::uint64_t>(hi))
    throw ParseError(std::string("/") + key + ": value " + std::to_string(v) + " out of range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  out = static_cast<T>(v);
}

}  // namespace

Json to_json(const Config& c) {
  return Json{{"seed", c.seed},
              {"n_max", c.n_max},
              {"m_max", c.m_max},
              {"tol", c.tol.str()},
              {"set_instances", c.set_instances},
              {"oracle_instances", c.oracle_instances},
              {"graph_mappings", c.graph_mappings},
              {"hull_mappings", c.hull_mappings},
              {"hull_samples", c.hull_samples},
              {"hull_refinements", c.hull_refinements},
              {"t1_mappings", c.t1_mappings},
              {"t1_points", c.t1_points},
              {"t1_graph_points", c.t1_graph_points},
              {"t2_mappings", c.t2_mappings},
              {"t2_samples", c.t2_samples},
              {"t2_converse", c.t2_converse},
              {"bridge_instances", c.bridge_instances},
              {"limit_instances", c.limit_instances},
              {"truncation", c.truncation},
              {"regularity_points", c.regularity_points},
              {"depth", c.depth},
              {"lipschitz_instances", c.lipschitz_instances},
              {"fault", fault_name(c.fault)}};
}

Config config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("/: config must be an object");
  Config c;
  const Json known = to_json(c);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.contains(it.key())) throw ParseError("/" + it.key() + ": unknown config field");
  read_count<std::uint64_t>(j, "seed", c.seed, 0, UINT64_MAX);
  read_count<std::size_t>(j, "n_max", c.n_max, 1, 3);
  read_count<std::size_t>(j, "m_max", c.m_max, 1, 3);
  if (j.contains("tol")) {
    c.tol = rat_from_json(j["tol"]);
    if (c.tol.sign() <= 0) throw ParseError("/tol: tolerance must be positive");
  }
  const std::size_t big = 1000000;
  read_count<std::size_t>(j, "set_instances", c.set_instances, 0, big);
  read_count<std::size_t>(j, "oracle_instances", c.oracle_instances, 0, big);
  read_count<std::size_t>(j, "graph_mappings", c.graph_mappings, 0, big);
  read_count<std::size_t>(j, "hull_mappings", c.hull_mappings, 0, big);
  read_count<std::size_t>(j, "hull_samples", c.hull_samples, 1, big);
  read_count<std::size_t>(j, "hull_refinements", c.hull_refinements, 1, 12);
  read_count<std::size_t>(j, "t1_mappings", c.t1_mappings, 0, big);
  read_count<std::size_t>(j, "t1_points", c.t1_points, 0, big);
  read_count<std::size_t>(j, "t1_graph_points", c.t1_graph_points, 0, big);
  read_count<std::size_t>(j, "t2_mappings", c.t2_mappings, 0, big);
  read_count<std::size_t>(j, "t2_samples", c.t2_samples, 1, big);
  read_count<std::size_t>(j, "t2_converse", c.t2_converse, 0, big);
  read_count<std::size_t>(j, "bridge_instances", c.bridge_instances, 0, big);
  read_count<std::size_t>(j, "limit_instances", c.limit_instances, 0, big);
  read_count<unsigned>(j, "truncation", c.truncation, 4, 4096);
  read_count<std::size_t>(j, "regularity_points", c.regularity_points, 0, big);
  read_count<unsigned>(j, "depth", c.depth, 2, 512);
  read_count<std::size_t>(j, "lipschitz_instances", c.lipschitz_instances, 0, big);
  if (j.contains("fault")) {
    if (!j["fault"].is_string()) throw ParseError("/fault: expected a string");
    std::string f = j["fault"].get<std::string>();
    if (f == "none") c.fault = Fault::None;
    else if (f == "radius") c.fault = Fault::Radius;
    else if (f == "lower-c") c.fault = Fault::LowerC;
    else throw ParseError("/fault: unknown fault \"" + f + "\"");
  }
  return c;
}

bool Report::pass() const {
  return std::none_of(cases.begin(), cases.end(), [](const Case& c) { return c.verdict == Verdict::Fail; });
}

Json Report::to_json() const {
  Json cs = Json::array();
  std::size_t pass = 0, fail = 0, expected = 0, checks = 0;
  for (const auto& c : cases) {
    Json ce = Json::array();
    for (const auto& e : c.counterexamples) ce.push_back(e);
    cs.push_back({{"id", c.id},
                  {"verdict", verdict_name(c.verdict)},
                  {"checks", c.checks},
                  {"failures", c.failures},
                  {"details", c.details},
                  {"counterexamples", ce}});
    checks += c.checks;
    if (c.verdict == Verdict::Pass) ++pass;
    else if (c.verdict == Verdict::Fail) ++fail;
    else ++expected;
  }
  return Json{{"suite", suite},
              {"config", icr::to_json(config)},
              {"cases", cs},
              {"summary", {{"cases", cases.size()}, {"pass", pass}, {"fail", fail}, {"expected_fail", expected}, {"checks", checks}}},
              {"verdict", this->pass() ? "PASS" : "FAIL"}};
}

namespace {

using Runner = suite::Cases (*)(const Config&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"sigma-props", suite::sigma_props}, {"normal-set-oracle", suite::normal_set_oracle},
      {"hull", suite::hull_suite},         {"graph-chars", suite::graph_chars},
      {"theorem1", suite::theorem1_suite}, {"theorem2", suite::theorem2_suite},
      {"limits", suite::limits_suite},     {"regularity", suite::regularity_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sigma-props", "normal-set-oracle", "hull",   "graph-chars", "theorem1",
                                              "theorem2",    "limits",            "regularity", "all"};
  return names;
}

Report run_suite(const std::string& name, const Config& cfg) {
  Report r{name, cfg, {}};
  auto add = [&](const std::string& suite, suite::Cases cases, bool prefix) {
    for (auto& c : cases) {
      if (prefix) c.id = suite + "/" + c.id;
      r.cases.push_back(std::move(c));
    }
  };
  if (name == "all") {
    for (const auto& [suite, run] : runners()) add(suite, run(cfg), true);
  } else {
    auto it = runners().find(name);
    if (it == runners().end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
    add(name, it->second(cfg), false);
  }
  std::stable_sort(r.cases.begin(), r.cases.end(), [](const Case& a, const Case& b) { return a.id < b.id; });
  return r;
}

namespace suite {

Rng suite_rng(const Config& cfg, const std::string& name) {
  std::uint64_t label = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    label ^= ch;
    label *= 0x100000001b3ULL;
  }
  return Rng(cfg.seed).fork(label);
}

std::size_t pick_dim(Rng& r, std::size_t cap) { return 1 + r.below(std::max<std::size_t>(cap, 1)); }

}  // namespace suite

}  // namespace icr
