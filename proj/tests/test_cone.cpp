#include "icr/cone.hpp"
#include "icr/random.hpp"

#include <doctest.h>

using namespace icr;

namespace {

StepMapping example_step() {
  return StepMapping(1, 1, {{VecPlus{1}, BoxUnion::box(VecPlus{1})}, {VecPlus{2}, BoxUnion::box(VecPlus{4})}});
}

std::vector<std::pair<VecPlus, VecPlus>> graph_grid(const HullMapping& h) {
  std::vector<std::pair<VecPlus, VecPlus>> out;
  for (long i = 0; i <= 24; ++i) {
    VecPlus x{Rat(i, 4)};
    BoxUnion v = h.eval(x);
    for (const auto& g : v.generators())
      for (long j = 0; j <= 4; ++j) out.emplace_back(x, g.scaled(Rat(j, 4)));
  }
  return out;
}

}  // namespace

TEST_CASE("Fourier-Motzkin feasibility") {
  LinSystem a(1);
  a.add_ge({Rat(1)}, Rat(0)).add({Rat(1)}, Rel::Lt, Rat(1));
  Feasibility fa = fm_feasible(a);
  REQUIRE(fa.feasible);
  CHECK(a.satisfied_by(*fa.witness));

  LinSystem b(1);
  b.add({Rat(1)}, Rel::Lt, Rat(0)).add_gt({Rat(1)}, Rat(0));
  CHECK_FALSE(fm_feasible(b).feasible);

  LinSystem c(2);
  c.add({Rat(1), Rat(1)}, Rel::Eq, Rat(2)).add_gt({Rat(1), Rat(0)}, Rat(0)).add_gt({Rat(0), Rat(1)}, Rat(0));
  c.add({Rat(1), Rat(0)}, Rel::Le, Rat(1, 2));
  Feasibility fc = fm_feasible(c);
  REQUIRE(fc.feasible);
  CHECK(c.satisfied_by(*fc.witness));

  // x <= 1 and x >= 1 is feasible only non-strictly.
  LinSystem d(1);
  d.add({Rat(1)}, Rel::Le, Rat(1)).add_ge({Rat(1)}, Rat(1));
  CHECK(fm_feasible(d).feasible);
  LinSystem e(1);
  e.add({Rat(1)}, Rel::Lt, Rat(1)).add_ge({Rat(1)}, Rat(1));
  CHECK_FALSE(fm_feasible(e).feasible);
}

TEST_CASE("Fourier-Motzkin minimization") {
  LinSystem a(1);
  a.add_ge({Rat(1)}, Rat(1));
  CHECK(fm_minimize(a, 0) == Rat(1));
  // min t with |u - 2| <= t, 0 <= u <= 1; variables (t, u).
  LinSystem b(2);
  b.add({Rat(-1), Rat(1)}, Rel::Le, Rat(2)).add({Rat(-1), Rat(-1)}, Rel::Le, Rat(-2));
  b.add_ge({Rat(0), Rat(1)}, Rat(0)).add({Rat(0), Rat(1)}, Rel::Le, Rat(1));
  CHECK(fm_minimize(b, 0) == Rat(1));
  LinSystem c(1);
  c.add({Rat(1)}, Rel::Le, Rat(3));
  CHECK_THROWS_AS(fm_minimize(c, 0), PreconditionError);
}

TEST_CASE("random systems: witnesses satisfy, infeasible verdicts survive a grid search") {
  Rng r(61);
  for (int i = 0; i < 100; ++i) {
    LinSystem s(2);
    for (int k = 0; k < 4; ++k) {
      std::vector<Rat> a{Rat(r.between(-3, 3)), Rat(r.between(-3, 3))};
      Rel rel = r.coin() ? Rel::Le : Rel::Lt;
      s.add(a, rel, Rat(r.between(-4, 4)));
    }
    Feasibility f = fm_feasible(s);
    if (f.feasible) {
      CHECK(s.satisfied_by(*f.witness));
      continue;
    }
    bool found = false;
    for (long u = -40; u <= 40 && !found; ++u)
      for (long v = -40; v <= 40 && !found; ++v) found = s.satisfied_by({Rat(u, 4), Rat(v, 4)});
    CHECK_FALSE(found);
  }
}

TEST_CASE("cone membership") {
  ConeSpec k(VecPlus{1, 1}, Rat(1));
  CHECK(cone_member(k, VecPlus{3, 3}));
  CHECK(cone_member(k, VecPlus{0, 0}));
  CHECK_FALSE(cone_member(k, VecPlus{1, 0}));
  CHECK(fm_feasible(cone_system(k, VecPlus{3, 3})).feasible);
  CHECK_FALSE(fm_feasible(cone_system(k, VecPlus{1, 0})).feasible);

  Rng r(67);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + r.below(3);
    ConeSpec c(random_vec(r, n, {4, 0, 8}), r.grid(4, 1, 8));
    VecPlus w = random_vec(r, n, {4, 0, 12});
    if (w.is_zero()) continue;
    CHECK(cone_member(c, w) == fm_feasible(cone_system(c, w)).feasible);
  }
}

TEST_CASE("elementary mapping E") {
  HullMapping h(example_step());
  ESpec e = build_E(h, VecPlus{1}, VecPlus{3});
  CHECK(e.cone.radius() == Rat(1, 3));
  CHECK(e.cone.strict_set() == std::vector<std::size_t>{0, 1});
  CHECK(build_E(example_step(), VecPlus{Rat(1, 2)}, VecPlus{1}).cone.radius() == Rat(1, 2));
  CHECK_THROWS_AS(build_E(h, VecPlus{1}, VecPlus{2}), PreconditionError);

  // Apex ray points are excluded, with an explicit witness.
  for (long c = 1; c <= 4; ++c) {
    Rat f = Rat(1) + Rat(c, 4);
    CHECK(bad_region_member(e, VecPlus{f}, VecPlus{f * Rat(3)}));
  }
  CHECK(apex_ray_witness(e, VecPlus{2}, VecPlus{6}));
  // (u, y/2) stays inside E when y != 0.
  for (long u = 0; u <= 8; ++u) CHECK(E_member(e, VecPlus{Rat(u, 2)}, VecPlus{Rat(3, 2)}));
  // The graph never meets the excluded region.
  for (const auto& [x, y] : graph_grid(h)) CHECK(E_member(e, x, y));
}

TEST_CASE("E with y = 0 excludes the whole fibre over x") {
  ESpec e{VecPlus{1}, VecPlus{0}, ConeSpec(VecPlus{1, 0}, Rat(1, 4)), "y = 0"};
  for (long v = 0; v <= 4; ++v) CHECK_FALSE(E_member(e, VecPlus{1}, VecPlus{Rat(v, 2)}));
  CHECK_FALSE(E_member(e, VecPlus{Rat(1, 2)}, VecPlus{0}));
}

TEST_CASE("theorem 1 witness on the example and on random hulls") {
  HullMapping h(example_step());
  Theorem1Check c = theorem1_witness(h, VecPlus{1}, VecPlus{3}, graph_grid(h));
  CHECK(c.pass());
  CHECK(c.alpha == Rat(1, 2));
  CHECK(c.radius == Rat(1, 6));
  CHECK_THROWS(theorem1_witness(h, VecPlus{1}, VecPlus{2}, {}));

  Theorem1Options bad;
  bad.radius_multiplier = Rat(2);
  CHECK_FALSE(theorem1_witness(h, VecPlus{1}, VecPlus{3}, graph_grid(h), bad).pass());

  Rng r(71);
  for (int i = 0; i < 20; ++i) {
    HullMapping g(random_step(r, 1, 1, 3, 1, {4, 0, 12}, {4, 0, 12}));
    VecPlus x = random_vec(r, 1, {4, 1, 12});
    Rat top = g.eval(x).diameter();
    VecPlus y{top + r.grid(4, 1, 8)};
    CHECK(theorem1_witness(g, x, y, graph_grid(g)).pass());
  }
}
