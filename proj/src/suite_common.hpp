#pragma once

#include "icr/random.hpp"
#include "icr/suites.hpp"

#include <functional>

namespace icr::suite {

inline constexpr std::size_t kMaxCounterexamples = 10;

/// Accumulates checks for one report case.
class CaseBuilder {
 public:
  explicit CaseBuilder(std::string id) { c_.id = std::move(id); }

  /// `describe` runs only for failures.
  void check(bool ok, const std::function<Json()>& describe) {
    ++c_.checks;
    if (ok) return;
    ++c_.failures;
    if (c_.counterexamples.size() < kMaxCounterexamples) c_.counterexamples.push_back(describe());
  }
  Json& details() { return c_.details; }

  Case finish() {
    c_.verdict = c_.failures == 0 ? Verdict::Pass : Verdict::Fail;
    return std::move(c_);
  }

 private:
  Case c_;
};

/// Exact value with its display rendering.
inline Json num(const Rat& r) { return Json{{"exact", r.str()}, {"decimal", r.decimal(20)}}; }
inline Json num(const ExtRat& r) { return r.is_inf() ? Json{{"exact", "inf"}} : num(r.value()); }

/// Independent stream per suite, so that "all" reproduces each suite.
Rng suite_rng(const Config& cfg, const std::string& suite);

std::size_t pick_dim(Rng& r, std::size_t cap);

using Cases = std::vector<Case>;

Cases sigma_props(const Config& cfg);
Cases normal_set_oracle(const Config& cfg);
Cases hull_suite(const Config& cfg);
Cases graph_chars(const Config& cfg);
Cases theorem1_suite(const Config& cfg);
Cases theorem2_suite(const Config& cfg);
Cases limits_suite(const Config& cfg);
Cases regularity_suite(const Config& cfg);

}  // namespace icr::suite
