#include "icr/delta_rep.hpp"
#include "icr/random.hpp"

#include <doctest.h>

using namespace icr;

namespace {

StepMapping example_step() {
  return StepMapping(1, 1, {{VecPlus{1}, BoxUnion::box(VecPlus{1})}, {VecPlus{2}, BoxUnion::box(VecPlus{4})}});
}

std::vector<VecPlus> line(long den, long from, long to) {
  std::vector<VecPlus> out;
  for (long i = from; i <= to; ++i) out.push_back(VecPlus{Rat(i, den)});
  return out;
}

std::vector<VecPlus> square(const Rat& lo, const Rat& hi, const Rat& step) {
  std::vector<VecPlus> out;
  for (Rat a = lo; a <= hi; a += step)
    for (Rat b = lo; b <= hi; b += step) out.push_back(VecPlus{a, b});
  return out;
}

// Intersection of the Delta values, each evaluated on its own.
BoxUnion delta_meet(const TSet& t, const VecPlus& x) {
  BoxUnion acc = t.triples().front().delta().eval(x);
  for (const auto& tr : t.triples()) acc = intersect(acc, tr.delta().eval(x));
  return acc;
}

}  // namespace

TEST_CASE("elementary majorant on the hull example") {
  Mapping h{HullMapping(example_step())};
  Majorant mj = elementary_majorant(h, VecPlus{1}, VecPlus{1}, line(8, 1, 32));
  CHECK(mj.k == VecPlus{2});
  CHECK(mj.c == Rat(2));
  for (const auto& x : line(8, 1, 32)) CHECK(h_plus(mj.k, mj.c, x) >= psi(h, VecPlus{1}, x));
}

TEST_CASE("elementary majorant with psi = 0 at the anchor") {
  Mapping f{StepMapping(1, 2, {{VecPlus{0}, BoxUnion::box(VecPlus{0, 1})}})};
  Majorant mj = elementary_majorant(f, VecPlus{1, 0}, VecPlus{1}, line(4, 1, 8));
  CHECK(mj.k.is_zero());
  CHECK(mj.c.is_zero());
}

TEST_CASE("elementary majorant rejects non-co-radiant input") {
  // F jumps from {0} to [0,1] at x = 1; at anchor 1/2 psi is 0, at 1 it is 1.
  Mapping f{StepMapping(1, 1, {{VecPlus{1}, BoxUnion::box(VecPlus{1})}})};
  CHECK_THROWS_AS(elementary_majorant(f, VecPlus{1}, VecPlus{Rat(1, 2)}, line(4, 1, 8)), PreconditionError);
}

TEST_CASE("triple sets") {
  CHECK_THROWS(TSet(1, 2, {{VecPlus{1, 0}, VecPlus{1}, Rat(1)}}));
  CHECK_THROWS(TSet(1, 1, {{VecPlus{0}, VecPlus{1}, Rat(1)}}));
  TSet t(1, 2, {{VecPlus{1, 0}, VecPlus{1}, Rat(1)}, {VecPlus{0, 1}, VecPlus{2}, Rat(0)}});
  for (const auto& x : line(2, 0, 8)) CHECK(t.eval(x) == delta_meet(t, x));
  CHECK(t.as_mapping().eval(VecPlus{3}) == t.eval(VecPlus{3}));
}

TEST_CASE("synthesis on the hull example is exact at anchors") {
  Mapping h{HullMapping(example_step())};
  TSet t = synthesize_T(h, {VecPlus{1}, VecPlus{2}}, unit_duals(1), line(8, 1, 32));
  CHECK(t.triples().size() == 2);
  CHECK(intersection_gap(h, t, VecPlus{1}).gap == ExtRat(Rat(0)));
  TSet one = synthesize_T(h, {VecPlus{1}}, unit_duals(1), line(8, 1, 32));
  CHECK(intersection_gap(h, one, VecPlus{1}).gap == ExtRat(Rat(0)));
  CHECK_THROWS(synthesize_T(h, {VecPlus{0}}, unit_duals(1), line(8, 1, 32)));
  CHECK_THROWS(synthesize_T(h, {VecPlus{1}}, {}, line(8, 1, 32)));
}

TEST_CASE("box-valued mappings: forward inclusion everywhere, zero gap at anchors") {
  Rng r(83);
  for (int i = 0; i < 15; ++i) {
    std::size_t n = 1 + r.below(2), m = 1 + r.below(2);
    Mapping f{HullMapping(random_box_step(r, n, m, 3))};
    std::vector<VecPlus> anchors = n == 1 ? line(2, 1, 6) : square(Rat(1, 2), Rat(3), Rat(1, 2));
    std::vector<VecPlus> probe = n == 1 ? line(8, 4, 24) : square(Rat(1, 2), Rat(3), Rat(1, 4));
    TSet t = synthesize_T(f, anchors, unit_duals(m), probe);
    for (const auto& a : anchors) {
      GapResult g = intersection_gap(f, t, a);
      CHECK(g.inclusion);
      CHECK(g.gap == ExtRat(Rat(0)));
    }
    for (int s = 0; s < 10; ++s) {
      VecPlus x = random_vec(r, n, {16, 8, 48});
      BoxUnion meet = delta_meet(t, x);
      CHECK(subset(f.eval(x), meet));
      GapResult g = intersection_gap(f, t, x);
      CHECK(g.inclusion);
      CHECK(g.gap == hausdorff(f.eval(x), meet));
    }
  }
}

TEST_CASE("staircase values need adaptive duals, and refinement does not increase the gap") {
  // Delta values with two generators; unit duals alone only recover the cube.
  Mapping f(DeltaMapping(VecPlus{2, 4}, VecPlus{1, 1}, Rat(0)));
  std::vector<VecPlus> probe = square(Rat(1, 2), Rat(4), Rat(1, 2));
  VecPlus x{Rat(7, 2), Rat(3, 2)};
  std::vector<VecPlus> coarse{VecPlus{Rat(1, 2), Rat(1, 2)}, VecPlus{4, 4}};
  TSet t0 = synthesize_T(f, coarse, unit_duals(2), probe);
  Rat g0 = intersection_gap(f, t0, x).gap.value();
  CHECK(g0 > Rat(0));

  std::vector<VecPlus> duals = unit_duals(2);
  std::vector<VecPlus> fine = square(Rat(1, 2), Rat(4), Rat(1, 2));
  for (const auto& a : fine)
    for (auto& l : adaptive_duals(f.eval(a), 16))
      if (std::find(duals.begin(), duals.end(), l) == duals.end()) duals.push_back(l);
  std::vector<VecPlus> anchors = coarse;
  anchors.insert(anchors.end(), fine.begin(), fine.end());
  TSet t1 = synthesize_T(f, anchors, duals, probe);
  GapResult g1 = intersection_gap(f, t1, x);
  CHECK(g1.inclusion);
  CHECK(g1.gap.value() <= g0);
}

TEST_CASE("adaptive duals cut off the corner beyond a staircase") {
  BoxUnion v = BoxUnion::canonicalize(2, {VecPlus{2, 1}, VecPlus{1, 2}});
  std::vector<VecPlus> ls = adaptive_duals(v);
  REQUIRE_FALSE(ls.empty());
  bool cut = false;
  VecPlus corner{Rat(2), Rat(2)};
  // Duals come normalized to max entry 1, so compare against sigma rather than 1.
  for (const auto& l : ls) {
    CHECK(l.max_entry() == Rat(1));
    cut = cut || coupling(l, corner) > support(v, l);
  }
  CHECK(cut);
}

TEST_CASE("random triple sets give ICR intersections with normal values") {
  Rng r(89);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 1 + r.below(2), m = 1 + r.below(2);
    std::vector<Triple> tr;
    for (std::size_t k = 0; k < m; ++k) tr.push_back({VecPlus::unit(m, k), random_vec(r, n, {4, 0, 8}), r.grid(4, 0, 8)});
    for (int k = 0; k < 5; ++k) {
      VecPlus l = random_vec(r, m, {4, 1, 8});
      tr.push_back({l, random_vec(r, n, {4, 0, 8}), r.grid(4, 0, 8)});
    }
    TSet t(n, m, tr);
    for (int s = 0; s < 10; ++s) {
      VecPlus x = random_vec(r, n, {4, 0, 12}), d = random_vec(r, n, {4, 0, 4});
      Rat c = r.grid(8, 1, 8);
      BoxUnion v = t.eval(x);
      CHECK_FALSE(v.empty());
      CHECK(member(v, VecPlus::zeros(m)));
      CHECK(subset(v, t.eval(x + d)));
      CHECK(subset(scale(c, v), t.eval(x.scaled(c))));
    }
  }
}
