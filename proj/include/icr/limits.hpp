#pragma once

#include "icr/mapping.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace icr {

/// s_k = max(floor, limit + coeff / k) for k >= 1; converges to max(floor, limit).
struct ScalarSeq {
  Rat limit;
  Rat coeff;
  Rat floor;

  Rat at(unsigned k) const;
  Rat lim() const { return max(floor, limit); }
};

struct ConstantSeq { BoxUnion set; };
struct PeriodicSeq { std::vector<BoxUnion> sets; };
/// C_k = s_k C
struct ScaledSeq { BoxUnion set; ScalarSeq scale; };
/// Finite prefix followed by a constant or scaled tail; the prefix does not
/// affect the limits.
struct PrefixedSeq {
  std::vector<BoxUnion> prefix;
  std::variant<ConstantSeq, ScaledSeq> tail;
};

using SetSequence = std::variant<ConstantSeq, PeriodicSeq, ScaledSeq, PrefixedSeq>;

std::size_t sequence_dim(const SetSequence& s);
/// k-th member, k >= 1.
BoxUnion sequence_term(const SetSequence& s, unsigned k);

struct SetLimits {
  BoxUnion liminf;
  BoxUnion limsup;
};

/// Exact Painleve-Kuratowski limits of the supported families.
SetLimits seq_limits(const SetSequence& s);

struct LimitMembership {
  bool in_liminf = false;
  bool in_limsup = false;
  /// Verdicts follow from the exact tail of the family rather than from the
  /// truncated distances alone.
  bool certified = false;
  /// d(x, C_k) for k = 1..K.
  std::vector<ExtRat> distances;
};

/// Evaluates the distances up to `truncation`. Periodic and constant tails
/// repeat exactly and certify the verdict; scaled tails are certified through
/// the monotone bracket of the distance between s_k and the limit scale.
LimitMembership limit_membership_probe(const SetSequence& s, const VecPlus& x, unsigned truncation,
                                       const Rat& tol);

// ---------------------------------------------------------------------------

struct ConstantDeltaSeq { DeltaMapping delta; };
struct PeriodicDeltaSeq { std::vector<DeltaMapping> deltas; };
/// Delta_{l, k, c_k} with c_k following a scalar sequence.
struct ScaledDeltaSeq { VecPlus l, k; ScalarSeq c; };

using MappingSequence = std::variant<ConstantDeltaSeq, PeriodicDeltaSeq, ScaledDeltaSeq>;

/// The value sequence k -> F^k(x) as a supported set sequence.
SetSequence reduce_at(const MappingSequence& ms, const VecPlus& x);
SetLimits mapping_seq_limits(const MappingSequence& ms, const VecPlus& x);
/// Pointwise lower and upper limit mappings, as expressions.
std::pair<Mapping, Mapping> limit_mappings(const MappingSequence& ms);

// ---------------------------------------------------------------------------

enum class Verdict { Pass, Fail, ExpectedFail };
std::string verdict_name(Verdict v);

struct RegularityConfig {
  unsigned depth = 64;      // K
  Rat tol = pow2_neg(16);
};

struct RegularityReport {
  std::string property;
  Verdict verdict = Verdict::Pass;
  /// Largest offending distance over the tail window k in [K/2, K].
  Rat worst = Rat(0);
  std::size_t checks = 0;
  std::optional<std::string> detail;
};

/// Approach schedules x_k = (1 + 2^-k) x, (1 - 2^-k) x and an alternating
/// per-coordinate perturbation, each scaled by x.
std::vector<VecPlus> approach_schedule(const VecPlus& x, unsigned k);

/// d(y_k, F(x)) <= tol for every generator y_k of F(x_k) and every k in the
/// tail window. `expect_failure` turns a failure into EXPECTED-FAIL (and a
/// pass into FAIL).
RegularityReport usc_probe(const Mapping& f, const VecPlus& x, const RegularityConfig& cfg,
                           bool expect_failure = false);
RegularityReport usc_probe(const Mapping& f, const VecPlus& x, const std::vector<std::vector<VecPlus>>& schedule,
                           const RegularityConfig& cfg, bool expect_failure = false);

/// For witnesses w in F(x) the rho-box around w meets F(x') for every
/// scheduled x' in the tail window. Witnesses default to the generators of
/// F(x) and rho to the tolerance.
RegularityReport lsc_probe(const Mapping& f, const VecPlus& x, const RegularityConfig& cfg,
                           bool expect_failure = false, std::vector<VecPlus> witnesses = {});
RegularityReport lsc_probe(const Mapping& f, const VecPlus& x, const std::vector<std::vector<VecPlus>>& schedule,
                           const RegularityConfig& cfg, bool expect_failure = false,
                           std::vector<VecPlus> witnesses = {});

struct LipschitzReport {
  Rat m_est;
  Rat m_theory;
  bool inclusion = true;   // F(x) in enlarge(F(y), m_est |x - y|) for all grid pairs
  bool dominated = true;   // m_est <= m_theory
  std::size_t pairs = 0;
};

/// Grid over the box [lo, hi] (strictly positive) with the given step.
/// m_theory follows the homogeneous-extension bound with the reference
/// point at `lo`: L * max_y max(max_j y_j / lo_j, 1) / min(min_j y_j, 1),
/// where L is the sup-norm radius of F(lo).
LipschitzReport lipschitz_probe(const Mapping& f, const VecPlus& lo, const VecPlus& hi, const Rat& step);

}  // namespace icr
