#pragma once

#include "icr/orthant.hpp"

#include <vector>

namespace icr {

/// Compact normal set stored as the union of boxes [0,g] over an antichain
/// of generators g. No generators means the empty set; the single generator
/// 0 means {0}. Generators are kept lexicographically sorted, so equality is
/// structural.
class BoxUnion {
 public:
  explicit BoxUnion(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DimensionError("set dimension must be positive");
  }
  /// Drops dominated generators and duplicates.
  static BoxUnion canonicalize(std::size_t dim, std::vector<VecPlus> raw);
  static BoxUnion box(VecPlus g);
  static BoxUnion origin(std::size_t dim) { return box(VecPlus::zeros(dim)); }

  std::size_t dim() const { return dim_; }
  bool empty() const { return gens_.empty(); }
  const std::vector<VecPlus>& generators() const { return gens_; }
  /// Sup-norm radius max_g max_i g_i; 0 for the empty set.
  Rat diameter() const;

  std::string str() const;

  friend bool operator==(const BoxUnion&, const BoxUnion&) = default;

 private:
  std::size_t dim_;
  std::vector<VecPlus> gens_;
};

bool member(const BoxUnion& c, const VecPlus& x);
bool subset(const BoxUnion& a, const BoxUnion& b);
BoxUnion set_union(const BoxUnion& a, const BoxUnion& b);
BoxUnion intersect(const BoxUnion& a, const BoxUnion& b);
/// Throws PreconditionError when either operand is empty.
BoxUnion minkowski_sum(const BoxUnion& a, const BoxUnion& b);
/// t > 0
BoxUnion scale(const Rat& t, const BoxUnion& a);

/// sup of the coupling over C, with sup of the empty set taken as 0.
Rat support(const BoxUnion& c, const VecPlus& l);
/// Chebyshev distance from x to C; +inf for the empty set.
ExtRat dist_inf(const VecPlus& x, const BoxUnion& c);
/// sup_{a in A} d(a, B); attained at generators because d(., B) is increasing.
ExtRat excess(const BoxUnion& a, const BoxUnion& b);
ExtRat hausdorff(const BoxUnion& a, const BoxUnion& b);

/// max over generators of min_{i in supp(x)} g_i / x_i, i.e. the largest t
/// with t x in C. Requires x != 0.
Rat radial_extent(const BoxUnion& c, const VecPlus& x);

/// Returns l with support(C, l) <= 1 < coupling(l, x). Throws
/// PreconditionError with "x in C" or "apex zero".
VecPlus separate(const BoxUnion& c, const VecPlus& x);

/// Orthant part of the eps-enlargement {y : d(y, C) <= eps}.
BoxUnion enlarge(const BoxUnion& c, const Rat& eps);

}  // namespace icr
