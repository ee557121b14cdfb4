#include "icr/limits.hpp"
#include "icr/random.hpp"

#include <doctest.h>

using namespace icr;

namespace {

BoxUnion box(std::initializer_list<Rat> g) { return BoxUnion::box(VecPlus(std::vector<Rat>(g))); }

StepMapping example_step() {
  return StepMapping(1, 1, {{VecPlus{1}, box({1})}, {VecPlus{2}, box({4})}});
}

}  // namespace

TEST_CASE("scalar sequences") {
  ScalarSeq s{Rat(1), Rat(1), Rat(0)};
  CHECK(s.at(1) == Rat(2));
  CHECK(s.at(4) == Rat(5, 4));
  CHECK(s.lim() == Rat(1));
  ScalarSeq f{Rat(1), Rat(-4), Rat(0)};
  CHECK(f.at(2) == Rat(0));
  CHECK(f.at(8) == Rat(1, 2));
}

TEST_CASE("set limits of the example families") {
  BoxUnion c = box({1, 1});
  SetLimits lc = seq_limits(ConstantSeq{c});
  CHECK((lc.liminf == c && lc.limsup == c));

  BoxUnion a = box({1, 0}), b = box({0, 1});
  SetLimits lp = seq_limits(PeriodicSeq{{a, b}});
  CHECK(lp.liminf == BoxUnion::origin(2));
  CHECK(lp.limsup == set_union(a, b));

  SetSequence sc = ScaledSeq{c, {Rat(1), Rat(1), Rat(0)}};
  CHECK(sequence_term(sc, 1) == box({2, 2}));
  SetLimits ls = seq_limits(sc);
  CHECK((ls.liminf == c && ls.limsup == c));

  SetSequence pre = PrefixedSeq{{box({9, 9})}, ConstantSeq{a}};
  CHECK(sequence_term(pre, 1) == box({9, 9}));
  CHECK(seq_limits(pre).liminf == a);
}

TEST_CASE("limit membership probe") {
  BoxUnion a = box({1, 0}), b = box({0, 1});
  SetSequence per = PeriodicSeq{{a, b}};
  LimitMembership m = limit_membership_probe(per, VecPlus{1, 0}, 256, Rat(1, 64));
  CHECK_FALSE(m.in_liminf);
  CHECK(m.in_limsup);
  CHECK(m.certified);
  CHECK(m.distances[0] == ExtRat(Rat(0)));
  CHECK(m.distances[1] == ExtRat(Rat(1)));

  SetSequence sc = ScaledSeq{box({1, 1}), {Rat(1), Rat(1), Rat(0)}};
  LimitMembership in = limit_membership_probe(sc, VecPlus{1, 1}, 256, Rat(1, 64));
  CHECK((in.in_liminf && in.in_limsup && in.certified));
  LimitMembership out = limit_membership_probe(sc, VecPlus{Rat(9, 8), 1}, 256, Rat(1, 64));
  CHECK((!out.in_liminf && !out.in_limsup && out.certified));
}

TEST_CASE("set limits agree with truncated distances on random scaled families") {
  Rng r(97);
  for (int i = 0; i < 30; ++i) {
    std::size_t dim = 1 + r.below(3);
    BoxUnion c = random_box_union(r, dim, 3, {4, 0, 8});
    ScalarSeq s{Rat(r.between(1, 4), 2), r.grid(16, -4, 4), Rat(0)};
    SetSequence seq = ScaledSeq{c, s};
    SetLimits lim = seq_limits(seq);
    CHECK(subset(lim.liminf, lim.limsup));
    for (int p = 0; p < 8; ++p) {
      VecPlus x = random_vec(r, dim, {8, 0, 24});
      // Tail window [128, 256], recomputing each term from the scalar.
      Rat worst(0);
      for (unsigned k = 128; k <= 256; ++k) {
        Rat sk = max(s.floor, s.limit + s.coeff / Rat(static_cast<long>(k)));
        worst = max(worst, dist_inf(x, scale(sk, c)).value());
      }
      CHECK(member(lim.liminf, x) == (worst <= Rat(1, 64)));
    }
  }
}

TEST_CASE("mapping sequence limits") {
  DeltaMapping d(VecPlus{2, 1}, VecPlus{1}, Rat(1));
  VecPlus x{Rat(3, 2)};
  SetLimits c = mapping_seq_limits(ConstantDeltaSeq{d}, x);
  CHECK((c.liminf == d.eval(x) && c.limsup == d.eval(x)));

  ScaledDeltaSeq sd{VecPlus{2, 1}, VecPlus{Rat(1, 2)}, {Rat(1), Rat(1), Rat(0)}};
  SetLimits s = mapping_seq_limits(sd, x);
  BoxUnion target = DeltaMapping(VecPlus{2, 1}, VecPlus{Rat(1, 2)}, Rat(1)).eval(x);
  CHECK((s.liminf == target && s.limsup == target));
  Rat worst(0);
  for (unsigned k = 128; k <= 256; ++k) {
    DeltaMapping dk(VecPlus{2, 1}, VecPlus{Rat(1, 2)}, Rat(1) + Rat(1) / Rat(static_cast<long>(k)));
    worst = max(worst, hausdorff(dk.eval(x), target).value());
  }
  CHECK(worst <= Rat(1, 64));

  DeltaMapping e(VecPlus{1, 2}, VecPlus{2}, Rat(0));
  SetLimits p = mapping_seq_limits(PeriodicDeltaSeq{{d, e}}, x);
  CHECK(p.liminf == intersect(d.eval(x), e.eval(x)));
  CHECK(p.limsup == set_union(d.eval(x), e.eval(x)));
  auto [lo, hi] = limit_mappings(PeriodicDeltaSeq{{d, e}});
  CHECK(lo.eval(x) == p.liminf);
  CHECK(hi.eval(x) == p.limsup);
}

TEST_CASE("semicontinuity probes") {
  RegularityConfig rc;
  Mapping h{HullMapping(example_step())};
  Mapping d(DeltaMapping(VecPlus{2, 1}, VecPlus{1, 3}, Rat(1)));
  for (const auto& x : {VecPlus{Rat(3, 2)}, VecPlus{1}, VecPlus{Rat(1, 3)}}) {
    CHECK(usc_probe(h, x, rc).verdict == Verdict::Pass);
    CHECK(lsc_probe(h, x, rc).verdict == Verdict::Pass);
  }
  VecPlus y{Rat(1, 2), Rat(5, 4)};
  CHECK(usc_probe(d, y, rc).verdict == Verdict::Pass);
  CHECK(lsc_probe(d, y, rc).verdict == Verdict::Pass);

  // Threshold of a step mapping approached from below.
  Mapping s{StepMapping(1, 1, {{VecPlus{1}, box({1})}})};
  std::vector<std::vector<VecPlus>> below;
  for (unsigned k = 1; k <= rc.depth; ++k) below.push_back({VecPlus{Rat(1) - pow2_neg(k)}});
  CHECK(usc_probe(s, VecPlus{1}, below, rc).verdict == Verdict::Pass);
  CHECK(lsc_probe(s, VecPlus{1}, below, rc, true).verdict == Verdict::ExpectedFail);
  CHECK(lsc_probe(s, VecPlus{1}, below, rc).verdict == Verdict::Fail);
  CHECK(lsc_probe(h, VecPlus{1}, rc, true).verdict == Verdict::Fail);
  CHECK(verdict_name(Verdict::ExpectedFail) == "EXPECTED-FAIL");
}

TEST_CASE("lipschitz probe") {
  Mapping h{HullMapping(example_step())};
  LipschitzReport r = lipschitz_probe(h, VecPlus{1}, VecPlus{2}, Rat(1, 8));
  // F^(t) = [0, 2t] on [1,2]: the exact constant is 2.
  CHECK(r.m_est == Rat(2));
  CHECK(r.inclusion);
  CHECK(r.dominated);
  CHECK(r.pairs > 0);

  Mapping c(DeltaMapping(VecPlus{1, 1}, VecPlus::zeros(2), Rat(1)));
  CHECK(lipschitz_probe(c, VecPlus{1, 1}, VecPlus{2, 2}, Rat(1, 4)).m_est == Rat(0));

  Mapping d(DeltaMapping(VecPlus{2, 1}, VecPlus{1, 3}, Rat(1)));
  LipschitzReport rd = lipschitz_probe(d, VecPlus{1, 1}, VecPlus{2, 2}, Rat(1, 4));
  CHECK(rd.inclusion);
  CHECK(rd.m_est <= rd.m_theory);
}
