#pragma once

#include "icr/normal_set.hpp"

#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace icr {

struct StepPiece {
  VecPlus threshold;
  BoxUnion value;
};

/// Increasing mapping F(x) = union of value_j over pieces with
/// threshold_j <= x. The canonical form always carries the origin piece
/// (0, {0}), merges pieces sharing a threshold, and orders pieces by
/// threshold lexicographically.
class StepMapping {
 public:
  StepMapping(std::size_t n, std::size_t m, std::vector<StepPiece> pieces);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const std::vector<StepPiece>& pieces() const { return pieces_; }

  BoxUnion eval(const VecPlus& x) const;

  friend bool operator==(const StepMapping&, const StepMapping&);

 private:
  std::size_t n_, m_;
  std::vector<StepPiece> pieces_;
};

/// Co-radiant hull x -> union_{lambda >= 1} F(lambda x) / lambda of a step
/// mapping, evaluated exactly through per-piece activation breakpoints.
class HullMapping {
 public:
  explicit HullMapping(StepMapping base) : base_(std::move(base)) {}
  const StepMapping& base() const { return base_; }
  std::size_t n() const { return base_.n(); }
  std::size_t m() const { return base_.m(); }

  BoxUnion eval(const VecPlus& x) const;

  friend bool operator==(const HullMapping& a, const HullMapping& b) { return a.base_ == b.base_; }

 private:
  StepMapping base_;
};

/// Elementary mapping x -> {y : max(max_i y_i, <l,y>) <= h+_{k,c}(x)}.
class DeltaMapping {
 public:
  DeltaMapping(VecPlus l, VecPlus k, Rat c);

  const VecPlus& l() const { return l_; }
  const VecPlus& k() const { return k_; }
  const Rat& c() const { return c_; }
  std::size_t n() const { return k_.dim(); }
  std::size_t m() const { return l_.dim(); }

  BoxUnion eval(const VecPlus& x) const;

  friend bool operator==(const DeltaMapping&, const DeltaMapping&) = default;

 private:
  VecPlus l_, k_;
  Rat c_;
};

/// For m = 1 the Delta value is [0, h+_{k', c'}(x)] with
/// k' = k / max(l, 1), c' = c / max(l, 1).
std::pair<VecPlus, Rat> scalar_delta_bridge(const DeltaMapping& d);

// ---------------------------------------------------------------------------
// Scalar functions for the embedding x -> [0, f(x)].

/// One elementary term max(max_i k_i x_i, c); `checked` selects the variant
/// that is +inf outside the support of k.
struct HTerm {
  VecPlus k;
  Rat c;
  bool checked = false;
};

/// Pointwise minimum of elementary terms.
struct MinOfH {
  std::vector<HTerm> terms;
};

/// f(x) = max of value_j over thresholds_j <= x (0 when none is active).
struct ScalarStep {
  std::vector<std::pair<VecPlus, Rat>> pieces;
};

using ScalarFn = std::variant<MinOfH, ScalarStep>;

ExtRat eval_scalar(const ScalarFn& f, const VecPlus& x);
std::size_t scalar_arity(const ScalarFn& f);

/// Co-radiant hull of a scalar step function through the same breakpoint
/// formula as HullMapping: max_j value_j / lambda_j(x).
Rat scalar_step_hull(const ScalarStep& f, const VecPlus& x);

// ---------------------------------------------------------------------------

/// Immutable expression tree over the built-in mapping families.
class Mapping {
 public:
  struct Embed { ScalarFn f; };
  struct Intersection { std::vector<Mapping> parts; };
  struct Union { std::vector<Mapping> parts; };
  struct Scaled { Rat t; std::vector<Mapping> inner; };
  struct Enlarged { Rat eps; std::vector<Mapping> inner; };
  struct Closure { std::vector<Mapping> inner; };
  using Node = std::variant<StepMapping, HullMapping, DeltaMapping, Embed, Intersection, Union, Scaled,
                            Enlarged, Closure>;

  Mapping(StepMapping s);   // NOLINT(google-explicit-constructor)
  Mapping(HullMapping h);   // NOLINT(google-explicit-constructor)
  Mapping(DeltaMapping d);  // NOLINT(google-explicit-constructor)

  static Mapping embed(ScalarFn f);
  static Mapping intersection(std::vector<Mapping> parts);
  static Mapping set_union(std::vector<Mapping> parts);
  static Mapping scaled(Rat t, Mapping inner);
  static Mapping enlarged(Rat eps, Mapping inner);
  static Mapping closure(Mapping inner);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const Node& node() const { return *node_; }
  /// Tag used by the serialized form.
  std::string kind() const;

  BoxUnion eval(const VecPlus& x) const;

 private:
  Mapping(std::shared_ptr<const Node> node, std::size_t n, std::size_t m)
      : node_(std::move(node)), n_(n), m_(m) {}
  std::shared_ptr<const Node> node_;
  std::size_t n_, m_;
};

/// [f](x) = [0, f(x)]; evaluation throws PreconditionError where f = +inf.
inline Mapping embed_scalar(ScalarFn f) { return Mapping::embed(std::move(f)); }

/// Union of F(lambda x) / lambda over a finite grid of lambda >= 1. An
/// inner approximation of the co-radiant hull, used as an independent oracle.
BoxUnion hull_oracle(const Mapping& f, const VecPlus& x, const std::vector<Rat>& lambda_grid);

/// psi_l(x) = support(F(x), l), l != 0.
Rat psi(const Mapping& f, const VecPlus& l, const VecPlus& x);

bool graph_member(const Mapping& f, const VecPlus& x, const VecPlus& y);

/// Exact Chebyshev distance from (x, y) to the graph.
ExtRat dist_to_graph(const StepMapping& f, const VecPlus& x, const VecPlus& y);
/// Exact distance to the hull graph, a finite union of polyhedra, each
/// minimized by Fourier-Motzkin. `nearest` receives a closest graph point.
ExtRat dist_to_graph(const HullMapping& f, const VecPlus& x, const VecPlus& y,
                     std::pair<VecPlus, VecPlus>* nearest = nullptr);

}  // namespace icr
