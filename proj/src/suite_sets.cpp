#include "suite_common.hpp"

#include <gmpxx.h>

namespace icr::suite {

namespace {

const GridSpec kSetGrid{4, 0, 12};

VecPlus nonzero_vec(Rng& r, std::size_t dim, const GridSpec& g) {
  VecPlus v = random_vec(r, dim, g);
  while (v.is_zero()) v = random_vec(r, dim, g);
  return v;
}

Case support_laws(const Config& cfg, Rng& r) {
  CaseBuilder cb("support-laws");
  // Monotonicity failures split by whether I+(l) grows from l to l2.
  std::size_t mono_same = 0, mono_grown = 0;
  for (std::size_t i = 0; i < cfg.set_instances; ++i) {
    std::size_t dim = pick_dim(r, 3);
    BoxUnion a = random_box_union(r, dim, 4, kSetGrid);
    BoxUnion b = random_box_union(r, dim, 4, kSetGrid);
    VecPlus l = random_vec(r, dim, {4, 0, 8});
    VecPlus lp = l + random_vec(r, dim, {4, 0, 4});
    Rat alpha = r.grid(4, 1, 16), t = r.grid(4, 1, 16);
    auto ctx = [&] {
      return Json{{"A", to_json(a)}, {"B", to_json(b)}, {"l", to_json(l)}, {"l2", to_json(lp)},
                  {"alpha", alpha.str()}, {"t", t.str()}};
    };
    Rat sa = support(a, l);
    cb.check(support(a, VecPlus::zeros(dim)).is_zero(), [&] { return Json{{"law", "(i)"}, {"case", ctx()}}; });
    cb.check(support(a, l.scaled(alpha)) == alpha * sa, [&] { return Json{{"law", "(ii)"}, {"case", ctx()}}; });
    bool mono = sa <= support(a, lp);
    if (!mono) ++(support_index(l) == support_index(lp) ? mono_same : mono_grown);
    cb.check(mono, [&] { return Json{{"law", "(iii)"}, {"case", ctx()}}; });
    cb.check(support(scale(t, a), l) == t * sa, [&] { return Json{{"law", "(vi)"}, {"case", ctx()}}; });
    cb.check(support(minkowski_sum(a, b), l) >= sa + support(b, l),
             [&] { return Json{{"law", "(vii)"}, {"case", ctx()}}; });
  }
  cb.details() = {{"instances", cfg.set_instances}, {"laws", {"(i)", "(ii)", "(iii)", "(vi)", "(vii)"}},
                  {"monotonicity_failures", {{"same_support", mono_same}, {"support_grows", mono_grown}}}};
  return cb.finish();
}

Case superadditivity_counterexample() {
  CaseBuilder cb("superadditivity-counterexample");
  BoxUnion a = BoxUnion::box(VecPlus{Rat(1), Rat(0)});
  BoxUnion b = BoxUnion::box(VecPlus{Rat(0), Rat(1)});
  VecPlus l{Rat(1), Rat(1)};
  Rat sa = support(a, l), sb = support(b, l), sab = support(minkowski_sum(a, b), l);
  cb.check(sa == Rat(0) && sb == Rat(0) && sab == Rat(1), [&] { return Json{{"sigma_A+B", sab.str()}}; });
  cb.details() = {{"A", to_json(a)}, {"B", to_json(b)}, {"l", to_json(l)},
                  {"sigma_A", num(sa)}, {"sigma_B", num(sb)}, {"sigma_A+B", num(sab)}};
  return cb.finish();
}

Case separation(const Config& cfg, Rng& r) {
  CaseBuilder cb("separation");
  for (std::size_t i = 0; i < cfg.set_instances; ++i) {
    std::size_t dim = pick_dim(r, 3);
    BoxUnion c = random_box_union(r, dim, 4, kSetGrid);
    VecPlus x = nonzero_vec(r, dim, {4, 0, 16});
    while (member(c, x)) x = nonzero_vec(r, dim, {4, 0, 16});
    VecPlus l = separate(c, x);
    Rat s = support(c, l), cx = coupling(l, x);
    cb.check(s <= Rat(1) && Rat(1) < cx, [&] {
      return Json{{"C", to_json(c)}, {"x", to_json(x)}, {"l", to_json(l)}, {"support", s.str()}, {"coupling", cx.str()}};
    });
  }
  cb.details() = {{"instances", cfg.set_instances}};
  return cb.finish();
}

/// A subset B decided by support functions alone: sigma_A <= sigma_B on the
/// duals 1/a (on the support of a) of every generator a of A, and on random
/// directions.
Case inclusion_equivalence(const Config& cfg, Rng& r) {
  CaseBuilder cb("inclusion-equivalence");
  std::size_t included = 0;
  for (std::size_t i = 0; i < cfg.set_instances; ++i) {
    std::size_t dim = pick_dim(r, 3);
    BoxUnion b = random_box_union(r, dim, 4, kSetGrid);
    BoxUnion a = random_box_union(r, dim, 3, kSetGrid);
    // Half of the pairs are inclusions by construction.
    if (r.coin()) a = intersect(a, b);
    std::vector<VecPlus> duals;
    for (const auto& g : a.generators()) {
      if (g.is_zero()) continue;
      std::vector<Rat> l(dim, Rat(0));
      for (std::size_t k = 0; k < dim; ++k)
        if (!g[k].is_zero()) l[k] = Rat(1) / g[k];
      duals.emplace_back(std::move(l));
    }
    for (int k = 0; k < 4; ++k) duals.push_back(nonzero_vec(r, dim, {4, 0, 8}));
    bool by_support = true;
    for (const auto& l : duals) by_support = by_support && support(a, l) <= support(b, l);
    bool by_generators = subset(a, b);
    if (by_generators) ++included;
    // Non-inclusion must also be witnessed by separating a generator of A from B.
    bool witnessed = by_generators;
    if (!by_generators)
      for (const auto& g : a.generators())
        if (!member(b, g)) {
          VecPlus l = separate(b, g);
          witnessed = support(b, l) < support(a, l);
          break;
        }
    cb.check(by_support == by_generators && witnessed, [&] {
      return Json{{"A", to_json(a)}, {"B", to_json(b)}, {"subset", by_generators}, {"support_criterion", by_support}};
    });
  }
  cb.details() = {{"instances", cfg.set_instances}, {"included", included}};
  return cb.finish();
}

// ---------------------------------------------------------------------------
// Grid oracle: points i / 8 with i in [0, 32]^dim.

constexpr long kDen = 8;
constexpr long kTop = 32;

using IVec = std::vector<long>;

long floor_scaled(const Rat& v) {
  mpz_class q;
  mpz_class num = v.raw().get_num() * kDen;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.raw().get_den().get_mpz_t());
  return q.fits_slong_p() ? q.get_si() : (q > 0 ? LONG_MAX : LONG_MIN);
}

/// Integer envelope of a set: i / 8 <= g  iff  i <= floor(8 g).
std::vector<IVec> envelope(const BoxUnion& c, const Rat& t = Rat(1)) {
  std::vector<IVec> out;
  for (const auto& g : c.generators()) {
    IVec e;
    for (const auto& v : g.entries()) e.push_back(floor_scaled(t * v));
    out.push_back(std::move(e));
  }
  return out;
}

bool in_env(const std::vector<IVec>& env, const IVec& p) {
  for (const auto& e : env) {
    bool ok = true;
    for (std::size_t k = 0; k < p.size() && ok; ++k) ok = p[k] <= e[k];
    if (ok) return true;
  }
  return false;
}

struct Grid {
  std::size_t dim;
  std::size_t size;
  explicit Grid(std::size_t d) : dim(d), size(1) {
    for (std::size_t k = 0; k < d; ++k) size *= kTop + 1;
  }
  IVec point(std::size_t idx) const {
    IVec p(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      p[k] = static_cast<long>(idx % (kTop + 1));
      idx /= kTop + 1;
    }
    return p;
  }
  std::size_t index(const IVec& p) const {
    std::size_t idx = 0;
    for (std::size_t k = dim; k-- > 0;) idx = idx * (kTop + 1) + static_cast<std::size_t>(p[k]);
    return idx;
  }
  std::vector<char> bitmap(const BoxUnion& c) const {
    auto env = envelope(c);
    std::vector<char> bits(size);
    for (std::size_t i = 0; i < size; ++i) bits[i] = in_env(env, point(i));
    return bits;
  }
};

/// Minkowski sum on the grid by enumerating all pairs of grid points.
std::vector<char> grid_sum(const Grid& g, const std::vector<char>& a, const std::vector<char>& b) {
  std::vector<IVec> pa, pb;
  for (std::size_t i = 0; i < g.size; ++i) {
    if (a[i]) pa.push_back(g.point(i));
    if (b[i]) pb.push_back(g.point(i));
  }
  std::vector<char> out(g.size, 0);
  IVec s(g.dim);
  for (const auto& p : pa)
    for (const auto& q : pb) {
      bool inside = true;
      for (std::size_t k = 0; k < g.dim && inside; ++k) {
        s[k] = p[k] + q[k];
        inside = s[k] <= kTop;
      }
      if (inside) out[g.index(s)] = 1;
    }
  return out;
}

/// Grid points within sup-distance r (in grid units) of a marked point.
std::vector<char> grid_fatten(const Grid& g, const std::vector<char>& a, long r) {
  std::vector<char> out(g.size, 0);
  for (std::size_t i = 0; i < g.size; ++i) {
    IVec p = g.point(i);
    IVec lo(g.dim), q(g.dim);
    for (std::size_t k = 0; k < g.dim; ++k) lo[k] = std::max(0L, p[k] - r);
    q = lo;
    bool found = false;
    while (!found) {
      found = a[g.index(q)];
      std::size_t k = 0;
      for (; k < g.dim; ++k) {
        if (++q[k] <= std::min(kTop, p[k] + r)) break;
        q[k] = lo[k];
      }
      if (k == g.dim) break;
    }
    out[i] = found;
  }
  return out;
}

Case oracle_case(const Config& cfg, Rng& r, const std::string& op) {
  CaseBuilder cb("oracle-" + op);
  const std::size_t cap = std::min<std::size_t>(3, std::max(cfg.n_max, cfg.m_max));
  std::size_t points = 0;
  for (std::size_t i = 0; i < cfg.oracle_instances; ++i) {
    std::size_t dim = pick_dim(r, cap);
    Grid grid(dim);
    // Generators stay in [0, 2] so sums and enlargements remain inside [0, 4].
    BoxUnion a = random_box_union(r, dim, 3, {4, 0, 8});
    BoxUnion b = random_box_union(r, dim, 3, {4, 0, 8});
    Rat t = std::vector<Rat>{Rat(1, 2), Rat(3, 4), Rat(3, 2), Rat(2)}[r.below(4)];
    Rat eps = r.grid(8, 1, 2);
    BoxUnion result = op == "union"       ? set_union(a, b)
                      : op == "intersect" ? intersect(a, b)
                      : op == "minkowski" ? minkowski_sum(a, b)
                      : op == "scale"     ? scale(t, a)
                                          : enlarge(a, eps);
    std::vector<char> ba = grid.bitmap(a), bb = grid.bitmap(b), expect(grid.size);
    if (op == "union" || op == "intersect") {
      for (std::size_t k = 0; k < grid.size; ++k) expect[k] = op == "union" ? (ba[k] || bb[k]) : (ba[k] && bb[k]);
    } else if (op == "minkowski") {
      expect = grid_sum(grid, ba, bb);
    } else if (op == "scale") {
      // p in tA  iff  p / t <= g for a generator g of A.
      auto env = envelope(a, t);
      for (std::size_t k = 0; k < grid.size; ++k) expect[k] = in_env(env, grid.point(k));
    } else {
      expect = grid_fatten(grid, ba, floor_scaled(eps));
    }
    std::vector<char> got = grid.bitmap(result);
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < grid.size; ++k) mismatches += got[k] != expect[k];
    points += grid.size;
    cb.check(mismatches == 0, [&] {
      return Json{{"A", to_json(a)}, {"B", to_json(b)}, {"t", t.str()}, {"eps", eps.str()},
                  {"result", to_json(result)}, {"mismatches", mismatches}};
    });
  }
  cb.details() = {{"instances", cfg.oracle_instances}, {"grid_step", "1/8"}, {"grid_box", "[0,4]^dim"},
                  {"grid_points", points}};
  return cb.finish();
}

}  // namespace

Cases sigma_props(const Config& cfg) {
  Rng r = suite_rng(cfg, "sigma-props");
  Rng r1 = r.fork(1), r2 = r.fork(2), r3 = r.fork(3);
  return {support_laws(cfg, r1), superadditivity_counterexample(), separation(cfg, r2),
          inclusion_equivalence(cfg, r3)};
}

Cases normal_set_oracle(const Config& cfg) {
  Rng r = suite_rng(cfg, "normal-set-oracle");
  Cases out;
  std::uint64_t label = 0;
  for (const char* op : {"union", "intersect", "minkowski", "scale", "enlarge"}) {
    Rng ro = r.fork(++label);
    out.push_back(oracle_case(cfg, ro, op));
  }
  return out;
}

}  // namespace icr::suite
