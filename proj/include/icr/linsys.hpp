#pragma once

#include "icr/orthant.hpp"

#include <optional>
#include <vector>

namespace icr {

enum class Rel { Le, Lt, Eq };

/// coeffs . x  rel  rhs
struct Constraint {
  std::vector<Rat> coeffs;
  Rel rel = Rel::Le;
  Rat rhs;
};

/// Finite system of rational linear constraints with strict inequalities.
class LinSystem {
 public:
  static constexpr std::size_t kMaxVariables = 12;

  explicit LinSystem(std::size_t vars);

  std::size_t variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return rows_; }

  LinSystem& add(std::vector<Rat> coeffs, Rel rel, Rat rhs);
  // Convenience for the reversed relations.
  LinSystem& add_ge(std::vector<Rat> coeffs, Rat rhs);
  LinSystem& add_gt(std::vector<Rat> coeffs, Rat rhs);

  /// True iff x satisfies every constraint exactly.
  bool satisfied_by(const std::vector<Rat>& x) const;

 private:
  std::size_t vars_;
  std::vector<Constraint> rows_;
};

struct Feasibility {
  bool feasible = false;
  /// Present iff feasible; verified against every constraint before return.
  std::optional<std::vector<Rat>> witness;
};

/// Exact Fourier-Motzkin decision with strictness tracking. Throws
/// PreconditionError when the system exceeds the variable budget.
Feasibility fm_feasible(const LinSystem& s);

/// Exact minimum of variable `objective` over a non-strict system. Throws
/// PreconditionError for strict rows, infeasible or unbounded systems.
Rat fm_minimize(const LinSystem& s, std::size_t objective);

}  // namespace icr
