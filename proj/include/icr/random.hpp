#pragma once

#include "icr/mapping.hpp"

#include <cstdint>
#include <random>

namespace icr {

/// Deterministic instance generator. Draws go through explicit modular
/// reduction of the raw engine output, so streams are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  long between(long lo, long hi);  // inclusive
  bool coin() { return below(2) == 1; }

  /// j / den with j uniform in [lo_num, hi_num].
  Rat grid(long den, long lo_num, long hi_num);
  /// Fresh stream keyed by a label, so suites do not perturb each other.
  Rng fork(std::uint64_t label);

 private:
  std::mt19937_64 eng_;
};

struct GridSpec {
  long den = 4;
  long lo = 0;   // numerator bounds
  long hi = 12;
};

VecPlus random_vec(Rng& r, std::size_t dim, const GridSpec& g);
/// Between 1 and max_gens generators (canonicalized, so possibly fewer).
BoxUnion random_box_union(Rng& r, std::size_t dim, std::size_t max_gens, const GridSpec& g);
StepMapping random_step(Rng& r, std::size_t n, std::size_t m, std::size_t pieces, std::size_t max_gens,
                        const GridSpec& thresholds, const GridSpec& values);
/// Step mapping whose piece values are single boxes with strictly positive
/// corners proportional to a common direction, so that its hull stays box
/// valued.
StepMapping random_box_step(Rng& r, std::size_t n, std::size_t m, std::size_t pieces);
DeltaMapping random_delta(Rng& r, std::size_t n, std::size_t m);

}  // namespace icr
