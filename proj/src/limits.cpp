#include "icr/limits.hpp"

#include <stdexcept>

namespace icr {

Rat ScalarSeq::at(unsigned k) const {
  if (k == 0) throw std::out_of_range("sequence index starts at 1");
  return max(floor, limit + coeff / Rat(static_cast<long>(k)));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

BoxUnion scaled_set(const Rat& s, const BoxUnion& c) {
  if (s.sign() < 0) throw PreconditionError("negative scale " + s.str() + " in sequence");
  if (s.is_zero()) return c.empty() ? c : BoxUnion::origin(c.dim());
  return scale(s, c);
}

void require_uniform(const std::vector<BoxUnion>& sets, std::size_t dim) {
  for (const auto& s : sets)
    if (s.dim() != dim) throw DimensionError("sequence members differ in dimension");
}

BoxUnion intersect_all(const std::vector<BoxUnion>& sets) {
  BoxUnion acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = intersect(acc, sets[i]);
  return acc;
}

BoxUnion union_all(const std::vector<BoxUnion>& sets) {
  BoxUnion acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = set_union(acc, sets[i]);
  return acc;
}

SetLimits tail_limits(const std::variant<ConstantSeq, ScaledSeq>& tail) {
  return std::visit(overloaded{
                        [](const ConstantSeq& c) { return SetLimits{c.set, c.set}; },
                        [](const ScaledSeq& s) {
                          BoxUnion lim = scaled_set(s.scale.lim(), s.set);
                          return SetLimits{lim, lim};
                        },
                    },
                    tail);
}

}  // namespace

std::size_t sequence_dim(const SetSequence& s) {
  return std::visit(overloaded{
                        [](const ConstantSeq& c) { return c.set.dim(); },
                        [](const PeriodicSeq& p) {
                          if (p.sets.empty()) throw PreconditionError("empty period");
                          require_uniform(p.sets, p.sets.front().dim());
                          return p.sets.front().dim();
                        },
                        [](const ScaledSeq& s) { return s.set.dim(); },
                        [](const PrefixedSeq& p) {
                          std::size_t d = std::visit([](const auto& t) { return t.set.dim(); }, p.tail);
                          require_uniform(p.prefix, d);
                          return d;
                        },
                    },
                    s);
}

BoxUnion sequence_term(const SetSequence& s, unsigned k) {
  if (k == 0) throw std::out_of_range("sequence index starts at 1");
  return std::visit(overloaded{
                        [](const ConstantSeq& c) { return c.set; },
                        [k](const PeriodicSeq& p) {
                          if (p.sets.empty()) throw PreconditionError("empty period");
                          return p.sets[(k - 1) % p.sets.size()];
                        },
                        [k](const ScaledSeq& s) { return scaled_set(s.scale.at(k), s.set); },
                        [k](const PrefixedSeq& p) {
                          if (k <= p.prefix.size()) return p.prefix[k - 1];
                          unsigned j = k - static_cast<unsigned>(p.prefix.size());
                          return std::visit(overloaded{
                                                [](const ConstantSeq& c) { return c.set; },
                                                [j](const ScaledSeq& t) { return scaled_set(t.scale.at(j), t.set); },
                                            },
                                            p.tail);
                        },
                    },
                    s);
}

SetLimits seq_limits(const SetSequence& s) {
  sequence_dim(s);
  return std::visit(overloaded{
                        [](const ConstantSeq& c) { return SetLimits{c.set, c.set}; },
                        [](const PeriodicSeq& p) { return SetLimits{intersect_all(p.sets), union_all(p.sets)}; },
                        [](const ScaledSeq& s) {
                          BoxUnion lim = scaled_set(s.scale.lim(), s.set);
                          return SetLimits{lim, lim};
                        },
                        [](const PrefixedSeq& p) { return tail_limits(p.tail); },
                    },
                    s);
}

namespace {

// d(x, sC) is nonincreasing in s and moves by at most |s - s'| times the
// sup-norm radius of C, so the distance at the declared limit scale is
// bracketed by any truncated distance.
void check_bracket(const ExtRat& dk, const ExtRat& dlim, const Rat& sk, const Rat& slim, const Rat& radius) {
  if (dk.is_inf() || dlim.is_inf()) {
    if (dk.is_inf() != dlim.is_inf()) throw std::logic_error("scaled tail: finiteness of distances disagrees");
    return;
  }
  Rat slack = (sk > slim ? sk - slim : slim - sk) * radius;
  if (dlim.value() > dk.value() + slack || dk.value() > dlim.value() + slack)
    throw std::logic_error("scaled tail: truncated distance escapes the bracket");
}

}  // namespace

LimitMembership limit_membership_probe(const SetSequence& s, const VecPlus& x, unsigned truncation,
                                       const Rat& tol) {
  if (truncation == 0) throw PreconditionError("truncation K must be at least 1");
  if (x.dim() != sequence_dim(s)) throw DimensionError("limit_membership_probe: dimension mismatch");
  LimitMembership out;
  for (unsigned k = 1; k <= truncation; ++k) out.distances.push_back(dist_inf(x, sequence_term(s, k)));

  auto approximate = [&] {
    const ExtRat& last = out.distances.back();
    bool near = !last.is_inf() && last.value() <= tol;
    out.in_liminf = out.in_limsup = near;
    out.certified = false;
  };

  auto scaled_tail = [&](const ScaledSeq& t, unsigned offset) {
    if (truncation <= offset) return approximate();
    Rat slim = t.scale.lim();
    BoxUnion lim = scaled_set(slim, t.set);
    ExtRat dlim = dist_inf(x, lim);
    check_bracket(out.distances.back(), dlim, t.scale.at(truncation - offset), slim, t.set.diameter());
    out.in_liminf = out.in_limsup = dlim == ExtRat(Rat(0));
    out.certified = true;
  };

  std::visit(overloaded{
                 [&](const ConstantSeq&) {
                   out.in_liminf = out.in_limsup = out.distances.back() == ExtRat(Rat(0));
                   out.certified = true;
                 },
                 [&](const PeriodicSeq& p) {
                   std::size_t period = p.sets.size();
                   if (truncation < period) return approximate();
                   bool all = true, any = false;
                   for (std::size_t i = truncation - period; i < truncation; ++i) {
                     bool hit = out.distances[i] == ExtRat(Rat(0));
                     all = all && hit;
                     any = any || hit;
                   }
                   out.in_liminf = all;
                   out.in_limsup = any;
                   out.certified = true;
                 },
                 [&](const ScaledSeq& t) { scaled_tail(t, 0); },
                 [&](const PrefixedSeq& p) {
                   unsigned offset = static_cast<unsigned>(p.prefix.size());
                   std::visit(overloaded{
                                  [&](const ConstantSeq&) {
                                    if (truncation <= offset) return approximate();
                                    out.in_liminf = out.in_limsup = out.distances.back() == ExtRat(Rat(0));
                                    out.certified = true;
                                  },
                                  [&](const ScaledSeq& t) { scaled_tail(t, offset); },
                              },
                              p.tail);
                 },
             },
             s);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

ScalarSeq height_sequence(const ScaledDeltaSeq& d, const VecPlus& x) {
  require_same_dim(d.k, x, "scaled Delta sequence");
  Rat kx(0);
  for (std::size_t i = 0; i < x.dim(); ++i) kx = max(kx, d.k[i] * x[i]);
  return {d.c.limit, d.c.coeff, max(kx, d.c.floor)};
}

/// {y : max(max_i y_i, <l,y>) <= 1}
BoxUnion unit_shape(const VecPlus& l) {
  DeltaMapping unit(l, VecPlus::zeros(1), Rat(1));
  return unit.eval(VecPlus::zeros(1));
}

}  // namespace

SetSequence reduce_at(const MappingSequence& ms, const VecPlus& x) {
  return std::visit(overloaded{
                        [&](const ConstantDeltaSeq& c) -> SetSequence { return ConstantSeq{c.delta.eval(x)}; },
                        [&](const PeriodicDeltaSeq& p) -> SetSequence {
                          if (p.deltas.empty()) throw PreconditionError("empty period");
                          PeriodicSeq out;
                          for (const auto& d : p.deltas) out.sets.push_back(d.eval(x));
                          return out;
                        },
                        [&](const ScaledDeltaSeq& d) -> SetSequence {
                          if (d.c.lim().sign() < 0 || d.c.floor.sign() < 0)
                            throw PreconditionError("scaled Delta sequence with negative c");
                          return ScaledSeq{unit_shape(d.l), height_sequence(d, x)};
                        },
                    },
                    ms);
}

SetLimits mapping_seq_limits(const MappingSequence& ms, const VecPlus& x) { return seq_limits(reduce_at(ms, x)); }

std::pair<Mapping, Mapping> limit_mappings(const MappingSequence& ms) {
  return std::visit(overloaded{
                        [](const ConstantDeltaSeq& c) { return std::pair{Mapping(c.delta), Mapping(c.delta)}; },
                        [](const PeriodicDeltaSeq& p) {
                          std::vector<Mapping> parts(p.deltas.begin(), p.deltas.end());
                          return std::pair{Mapping::intersection(parts), Mapping::set_union(parts)};
                        },
                        [](const ScaledDeltaSeq& d) {
                          Mapping lim(DeltaMapping(d.l, d.k, d.c.lim()));
                          return std::pair{lim, lim};
                        },
                    },
                    ms);
}

// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::ExpectedFail: return "EXPECTED-FAIL";
  }
  return "FAIL";
}

std::vector<VecPlus> approach_schedule(const VecPlus& x, unsigned k) {
  Rat e = pow2_neg(k);
  std::vector<Rat> alt;
  for (std::size_t i = 0; i < x.dim(); ++i) alt.push_back(x[i] * (i % 2 == 0 ? Rat(1) + e : Rat(1) - e));
  return {x.scaled(Rat(1) + e), x.scaled(Rat(1) - e), VecPlus(std::move(alt))};
}

namespace {

std::vector<std::vector<VecPlus>> default_schedule(const VecPlus& x, unsigned depth) {
  std::vector<std::vector<VecPlus>> out;
  for (unsigned k = 1; k <= depth; ++k) out.push_back(approach_schedule(x, k));
  return out;
}

void finish(RegularityReport& r, const RegularityConfig& cfg, bool expect_failure) {
  bool ok = r.worst <= cfg.tol;
  if (expect_failure) {
    r.verdict = ok ? Verdict::Fail : Verdict::ExpectedFail;
    if (ok) r.detail = "expected failure did not occur";
  } else {
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  }
}

/// Indices k (1-based) of the tail window [K/2, K].
std::pair<std::size_t, std::size_t> window(std::size_t depth) { return {std::max<std::size_t>(1, depth / 2), depth}; }

}  // namespace

RegularityReport usc_probe(const Mapping& f, const VecPlus& x, const RegularityConfig& cfg, bool expect_failure) {
  return usc_probe(f, x, default_schedule(x, cfg.depth), cfg, expect_failure);
}

RegularityReport usc_probe(const Mapping& f, const VecPlus& x, const std::vector<std::vector<VecPlus>>& schedule,
                           const RegularityConfig& cfg, bool expect_failure) {
  if (!x.strictly_positive()) throw PreconditionError("usc_probe needs a strictly positive point");
  BoxUnion fx = f.eval(x);
  if (fx.empty()) throw PreconditionError("usc_probe: F(x) is empty");
  RegularityReport r;
  r.property = "usc";
  auto [lo, hi] = window(schedule.size());
  for (std::size_t k = lo; k <= hi; ++k)
    for (const auto& xk : schedule[k - 1]) {
      BoxUnion fk = f.eval(xk);
      for (const auto& y : fk.generators()) {
        ++r.checks;
        Rat d = dist_inf(y, fx).value();
        if (d > r.worst) {
          r.worst = d;
          r.detail = "k=" + std::to_string(k) + " x'=" + xk.str() + " y=" + y.str();
        }
      }
    }
  finish(r, cfg, expect_failure);
  return r;
}

RegularityReport lsc_probe(const Mapping& f, const VecPlus& x, const RegularityConfig& cfg, bool expect_failure,
                           std::vector<VecPlus> witnesses) {
  return lsc_probe(f, x, default_schedule(x, cfg.depth), cfg, expect_failure, std::move(witnesses));
}

RegularityReport lsc_probe(const Mapping& f, const VecPlus& x, const std::vector<std::vector<VecPlus>>& schedule,
                           const RegularityConfig& cfg, bool expect_failure, std::vector<VecPlus> witnesses) {
  BoxUnion fx = f.eval(x);
  if (fx.empty()) throw PreconditionError("lsc_probe: x is outside the domain");
  if (witnesses.empty()) witnesses = fx.generators();
  for (const auto& w : witnesses)
    if (!member(fx, w)) throw PreconditionError("lsc witness " + w.str() + " is not in F(x)");
  RegularityReport r;
  r.property = "lsc";
  auto [lo, hi] = window(schedule.size());
  for (std::size_t k = lo; k <= hi; ++k)
    for (const auto& xk : schedule[k - 1]) {
      BoxUnion fk = f.eval(xk);
      for (const auto& w : witnesses) {
        ++r.checks;
        // The sup-norm box of radius rho around w meets the normal set F(x')
        // exactly when rho >= d(w, F(x')).
        ExtRat d = dist_inf(w, fk);
        Rat dv = d.is_inf() ? w.max_entry() + cfg.tol + Rat(1) : d.value();
        if (dv > r.worst) {
          r.worst = dv;
          r.detail = "k=" + std::to_string(k) + " x'=" + xk.str() + " w=" + w.str();
        }
      }
    }
  finish(r, cfg, expect_failure);
  return r;
}

LipschitzReport lipschitz_probe(const Mapping& f, const VecPlus& lo, const VecPlus& hi, const Rat& step) {
  require_same_dim(lo, hi, "lipschitz_probe");
  if (!lo.strictly_positive()) throw PreconditionError("Lipschitz box touches the boundary");
  if (!leq(lo, hi)) throw PreconditionError("Lipschitz box corners are not ordered");
  if (step.sign() <= 0) throw PreconditionError("grid step must be positive");

  std::vector<VecPlus> grid;
  std::vector<Rat> cur(lo.entries().begin(), lo.entries().end());
  while (true) {
    grid.emplace_back(cur);
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      cur[i] += step;
      if (cur[i] <= hi[i]) break;
      cur[i] = lo[i];
    }
    if (i == cur.size()) break;
  }

  std::vector<BoxUnion> values;
  for (const auto& x : grid) {
    values.push_back(f.eval(x));
    if (values.back().empty()) throw PreconditionError("F is empty at " + x.str());
  }

  LipschitzReport out;
  out.m_est = Rat(0);
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = 0; b < grid.size(); ++b) {
      if (a == b) continue;
      ExtRat e = excess(values[a], values[b]);
      if (e.is_inf()) throw PreconditionError("unbounded excess between grid points");
      out.m_est = max(out.m_est, e.value() / dist_sup(grid[a], grid[b]));
    }
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = 0; b < grid.size(); ++b) {
      if (a == b) continue;
      ++out.pairs;
      Rat eps = out.m_est * dist_sup(grid[a], grid[b]);
      BoxUnion fat = eps.is_zero() ? values[b] : enlarge(values[b], eps);
      if (!subset(values[a], fat)) out.inclusion = false;
    }

  Rat radius = f.eval(lo).diameter();
  Rat worst(0);
  for (const auto& y : grid) {
    Rat top(1);
    for (std::size_t j = 0; j < y.dim(); ++j) top = max(top, y[j] / lo[j]);
    worst = max(worst, top / min(y.min_entry(), Rat(1)));
  }
  out.m_theory = radius * worst;
  out.dominated = out.m_est <= out.m_theory;
  return out;
}

}  // namespace icr
