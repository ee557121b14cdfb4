#pragma once

#include "icr/mapping.hpp"

#include <optional>
#include <string>
#include <vector>

namespace icr {

struct Triple {
  VecPlus l, k;
  Rat c;

  DeltaMapping delta() const { return DeltaMapping(l, k, c); }
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Nonempty finite family of (l, k, c) with l != 0 that carries, for every
/// output coordinate i, a triple whose l is the unit vector e^i.
class TSet {
 public:
  TSet(std::size_t n, std::size_t m, std::vector<Triple> triples);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const std::vector<Triple>& triples() const { return triples_; }

  /// x -> intersection of Delta_{l,k,c}(x) over the family.
  Mapping as_mapping() const;
  BoxUnion eval(const VecPlus& x) const;

 private:
  std::size_t n_, m_;
  std::vector<Triple> triples_;
};

struct Majorant {
  VecPlus k;
  Rat c;
};

/// k = psi_l(x0) / x0, c = psi_l(x0). The majorant property h+ >= psi_l is
/// checked on `probe_grid`; a violation means the input is not ICR and
/// raises PreconditionError.
Majorant elementary_majorant(const Mapping& f, const VecPlus& l, const VecPlus& x0,
                             const std::vector<VecPlus>& probe_grid);

/// One triple per (dual, anchor). The dual is rescaled so that the cube part
/// of Delta contains F(x0); when psi_l vanishes at x0 the triple keeps l and
/// majorizes the sup-norm of the values instead.
TSet synthesize_T(const Mapping& f, const std::vector<VecPlus>& anchors, const std::vector<VecPlus>& duals,
                  const std::vector<VecPlus>& probe_grid);

/// Directions cutting off the complement of a staircase value: for every
/// assignment of generators to coordinates, the dual returned by the
/// separation oracle at the point just beyond the corner it determines.
/// Corners with a zero coordinate are skipped. Capped at `max_duals`.
std::vector<VecPlus> adaptive_duals(const BoxUnion& value, std::size_t max_duals = 512);

std::vector<VecPlus> unit_duals(std::size_t m);

struct GapResult {
  ExtRat gap = Rat(0);
  /// F(x) is contained in the Delta intersection, as the representation requires.
  bool inclusion = true;
};

GapResult intersection_gap(const Mapping& f, const TSet& t, const VecPlus& x);

}  // namespace icr
