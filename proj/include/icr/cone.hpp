#pragma once

#include "icr/linsys.hpp"
#include "icr/mapping.hpp"

#include <optional>
#include <string>
#include <vector>

namespace icr {

/// K = { sum_i lambda_i (z + r e_i) : lambda >= 0, lambda_i > 0 on supp(z) } U {0}.
class ConeSpec {
 public:
  ConeSpec(VecPlus apex, Rat radius);

  const VecPlus& apex() const { return apex_; }
  const Rat& radius() const { return radius_; }
  const std::vector<std::size_t>& strict_set() const { return strict_; }

 private:
  VecPlus apex_;
  Rat radius_;
  std::vector<std::size_t> strict_;
};

/// Closed-form membership: s = sum(w) / (r + sum(z)), lambda = (w - s z) / r.
bool cone_member(const ConeSpec& k, const VecPlus& w);
/// Defining system in lambda for w != 0 (lambda >= 0, strict on supp(z),
/// sum(lambda) > 0, sum_i lambda_i (z + r e_i) = w).
LinSystem cone_system(const ConeSpec& k, const VecPlus& w);

/// Elementary mapping E_{A,(x,y)} whose graph is the complement of
/// (x,y) + K \ {0} + (-orthant_n) x orthant_m. Never materialized.
struct ESpec {
  VecPlus x, y;
  ConeSpec cone;
  std::string provenance;

  std::size_t n() const { return x.dim(); }
  std::size_t m() const { return y.dim(); }
};

/// System in lambda deciding whether (u, v) lies in the excluded region.
LinSystem bad_region_system(const ESpec& e, const VecPlus& u, const VecPlus& v);
bool bad_region_member(const ESpec& e, const VecPlus& u, const VecPlus& v);
inline bool E_member(const ESpec& e, const VecPlus& u, const VecPlus& v) { return !bad_region_member(e, u, v); }

/// Radius = distance to the graph; throws PreconditionError("(x,y) on graph").
ESpec build_E(const StepMapping& f, const VecPlus& x, const VecPlus& y, std::string provenance = {});
ESpec build_E(const HullMapping& f, const VecPlus& x, const VecPlus& y, std::string provenance = {});

/// Distance to the hull graph by the monotone closed form: with u = x + t
/// and v = (y - t)+ the feasibility thresholds in t are explicit. A second
/// route to the Fourier-Motzkin distance, used to certify cone radii.
Rat hull_graph_distance_direct(const HullMapping& f, const VecPlus& x, const VecPlus& y);

/// Explicit witness that (x, y) = z + c z with z = alpha (x, y), c = (1 - alpha) / alpha,
/// lies in z + K \ {0}. Returns the lambda vector when the certificate checks.
std::optional<std::vector<Rat>> apex_ray_witness(const ESpec& e, const VecPlus& x, const VecPlus& y);

struct Theorem1Check {
  VecPlus x, y;
  Rat alpha;
  unsigned halvings = 0;
  Rat radius;
  bool radius_certified = false;  // equals the direct distance and a nearest graph point attains it
  bool apex_ray_excludes = false;
  bool fm_excludes = false;
  std::size_t graph_points = 0;
  std::size_t graph_violations = 0;
  std::optional<std::string> error;

  bool pass() const {
    return !error && radius_certified && apex_ray_excludes && fm_excludes && graph_violations == 0;
  }
};

struct Theorem1Options {
  unsigned max_halvings = 64;
  /// Fault injection: multiplies the cone radius after construction.
  Rat radius_multiplier = Rat(1);
};

/// Searches alpha = 1 - 2^-k, builds E at alpha (x, y), and verifies that E
/// excludes (x, y) while containing every graph sample.
Theorem1Check theorem1_witness(const HullMapping& f, const VecPlus& x, const VecPlus& y,
                               const std::vector<std::pair<VecPlus, VecPlus>>& graph_samples,
                               const Theorem1Options& opt = {});

}  // namespace icr
