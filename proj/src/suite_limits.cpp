#include "icr/probes.hpp"
#include "suite_common.hpp"

namespace icr::suite {

namespace {

/// Decision threshold of the truncated-distance oracle. Points sit on the
/// 1/8 grid and limit generators on the 1/8 grid too, so exact distances are
/// 0 or at least 1/8, while the tail of a scaled family deviates from its
/// limit by at most 2/K.
const Rat kTau(1, 64);

/// Independent evaluation of the k-th member, straight from the family data.
BoxUnion oracle_term(const SetSequence& s, unsigned k) {
  auto scaled = [](const BoxUnion& c, const ScalarSeq& q, unsigned j) {
    Rat v = q.limit + q.coeff / Rat(static_cast<long>(j));
    if (v < q.floor) v = q.floor;
    return v.is_zero() ? BoxUnion::origin(c.dim()) : scale(v, c);
  };
  if (const auto* c = std::get_if<ConstantSeq>(&s)) return c->set;
  if (const auto* p = std::get_if<PeriodicSeq>(&s)) return p->sets[(k - 1) % p->sets.size()];
  if (const auto* q = std::get_if<ScaledSeq>(&s)) return scaled(q->set, q->scale, k);
  const auto& pre = std::get<PrefixedSeq>(s);
  if (k <= pre.prefix.size()) return pre.prefix[k - 1];
  unsigned j = k - static_cast<unsigned>(pre.prefix.size());
  if (const auto* c = std::get_if<ConstantSeq>(&pre.tail)) return c->set;
  const auto& q = std::get<ScaledSeq>(pre.tail);
  return scaled(q.set, q.scale, j);
}

ScalarSeq random_scalar_seq(Rng& r) {
  static const std::vector<Rat> limits{Rat(1, 2), Rat(1), Rat(3, 2), Rat(2)};
  return {limits[r.below(limits.size())], r.grid(16, -4, 4), Rat(0)};
}

SetSequence random_sequence(Rng& r, std::size_t dim, std::size_t idx, std::string& family) {
  const GridSpec g{4, 0, 8};
  switch (idx % 4) {
    case 0: family = "constant"; return ConstantSeq{random_box_union(r, dim, 3, g)};
    case 1: {
      family = "periodic";
      PeriodicSeq p;
      std::size_t period = 1 + r.below(3);
      for (std::size_t i = 0; i < period; ++i) p.sets.push_back(random_box_union(r, dim, 3, g));
      return p;
    }
    case 2: family = "scaled"; return ScaledSeq{random_box_union(r, dim, 3, g), random_scalar_seq(r)};
    default: {
      family = "prefixed";
      PrefixedSeq p{{random_box_union(r, dim, 3, g), random_box_union(r, dim, 3, g)}, ConstantSeq{random_box_union(r, dim, 3, g)}};
      if (r.coin()) p.tail = ScaledSeq{random_box_union(r, dim, 3, g), random_scalar_seq(r)};
      return p;
    }
  }
}

Case set_limit_examples() {
  CaseBuilder cb("examples");
  BoxUnion a = BoxUnion::box(VecPlus{Rat(1), Rat(0)}), b = BoxUnion::box(VecPlus{Rat(0), Rat(1)});
  SetSequence per = PeriodicSeq{{a, b}};
  SetLimits pl = seq_limits(per);
  cb.check(pl.liminf == BoxUnion::origin(2), [&] { return Json{{"liminf", to_json(pl.liminf)}}; });
  cb.check(pl.limsup == set_union(a, b), [&] { return Json{{"limsup", to_json(pl.limsup)}}; });
  LimitMembership lm = limit_membership_probe(per, VecPlus{Rat(1), Rat(0)}, 256, kTau);
  cb.check(!lm.in_liminf && lm.in_limsup && lm.certified, [&] { return Json{{"probe", "x in A minus B"}}; });
  SetSequence sc = ScaledSeq{BoxUnion::box(VecPlus{Rat(1), Rat(1)}), {Rat(1), Rat(1), Rat(0)}};
  SetLimits sl = seq_limits(sc);
  cb.check(sl.liminf == BoxUnion::box(VecPlus{Rat(1), Rat(1)}) && sl.limsup == sl.liminf,
           [&] { return Json{{"scaled_limit", to_json(sl.liminf)}}; });
  cb.details() = {{"periodic", {{"liminf", to_json(pl.liminf)}, {"limsup", to_json(pl.limsup)}}},
                  {"scaled", to_json(sl.liminf)}};
  return cb.finish();
}

Case set_limits(const Config& cfg, Rng& r) {
  CaseBuilder cb("set-limits");
  const unsigned K = cfg.truncation;
  Json families = Json::object();
  std::size_t certified = 0;
  for (std::size_t i = 0; i < cfg.limit_instances; ++i) {
    std::size_t dim = pick_dim(r, 3);
    std::string family;
    SetSequence s = random_sequence(r, dim, i, family);
    families[family] = families.value(family, 0) + 1;
    SetLimits lim = seq_limits(s);
    cb.check(subset(lim.liminf, lim.limsup), [&] { return Json{{"sequence", to_json(s)}, {"law", "liminf in limsup"}}; });

    std::vector<BoxUnion> terms;
    for (unsigned k = 1; k <= K; ++k) terms.push_back(oracle_term(s, k));
    std::vector<VecPlus> points;
    for (int p = 0; p < 12; ++p) points.push_back(random_vec(r, dim, {8, 0, 24}));
    for (const auto& g : lim.limsup.generators()) {
      points.push_back(g);
      std::vector<Rat> up(g.entries().begin(), g.entries().end());
      up[r.below(dim)] += Rat(1, 8);
      points.emplace_back(std::move(up));
    }
    for (const auto& x : points) {
      Rat lo_max(0);
      std::optional<Rat> lo_min;
      for (unsigned k = K / 2; k <= K; ++k) {
        Rat d = dist_inf(x, terms[k - 1]).value();
        lo_max = max(lo_max, d);
        if (!lo_min || d < *lo_min) lo_min = d;
      }
      bool oracle_inf = lo_max <= kTau, oracle_sup = *lo_min <= kTau;
      bool in_inf = member(lim.liminf, x), in_sup = member(lim.limsup, x);
      LimitMembership probe = limit_membership_probe(s, x, K, kTau);
      if (probe.certified) ++certified;
      bool probe_ok = !probe.certified || (probe.in_liminf == in_inf && probe.in_limsup == in_sup);
      cb.check(oracle_inf == in_inf && oracle_sup == in_sup && probe_ok, [&] {
        return Json{{"sequence", to_json(s)}, {"x", to_json(x)},
                    {"exact", {in_inf, in_sup}}, {"oracle", {oracle_inf, oracle_sup}},
                    {"probe", {probe.in_liminf, probe.in_limsup, probe.certified}}};
      });
    }
  }
  cb.details() = {{"instances", cfg.limit_instances}, {"truncation", K}, {"tau", kTau.str()},
                  {"families", families}, {"certified_probe_verdicts", certified}};
  return cb.finish();
}

MappingSequence random_mapping_sequence(Rng& r, std::size_t n, std::size_t m, std::size_t idx, std::string& family) {
  switch (idx % 3) {
    case 0: family = "constant"; return ConstantDeltaSeq{random_delta(r, n, m)};
    case 1: {
      family = "periodic";
      DeltaMapping a = random_delta(r, n, m), b = random_delta(r, n, m);
      return PeriodicDeltaSeq{{a, b}};
    }
    default: {
      family = "scaled";
      VecPlus l = random_vec(r, m, {4, 1, 8});
      return ScaledDeltaSeq{l, random_vec(r, n, {4, 0, 8}), {r.grid(4, 0, 8), r.grid(4, 1, 4), Rat(0)}};
    }
  }
}

DeltaMapping oracle_delta(const MappingSequence& ms, unsigned k) {
  if (const auto* c = std::get_if<ConstantDeltaSeq>(&ms)) return c->delta;
  if (const auto* p = std::get_if<PeriodicDeltaSeq>(&ms)) return p->deltas[(k - 1) % p->deltas.size()];
  const auto& s = std::get<ScaledDeltaSeq>(ms);
  Rat c = s.c.limit + s.c.coeff / Rat(static_cast<long>(k));
  return DeltaMapping(s.l, s.k, c < s.c.floor ? s.c.floor : c);
}

Case mapping_limits(const Config& cfg, Rng& r) {
  CaseBuilder cb("mapping-limits");
  const unsigned K = cfg.truncation;
  std::size_t count = std::max<std::size_t>(1, cfg.limit_instances / 5);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = pick_dim(r, 2), m = pick_dim(r, 2);
    std::string family;
    MappingSequence ms = random_mapping_sequence(r, n, m, i, family);
    auto [lower, upper] = limit_mappings(ms);
    SampleSpec spec;
    for (int k = 0; k < 4; ++k) spec.points.push_back(random_vec(r, n, {4, 0, 12}));
    for (int k = 0; k < 3; ++k) {
      VecPlus x = random_vec(r, n, {4, 0, 8});
      spec.comparable.emplace_back(x, x + random_vec(r, n, {4, 0, 8}));
    }
    spec.shrink = {Rat(1, 2), Rat(3, 4)};
    spec.stretch = {Rat(2)};
    auto ctx = [&] { return Json{{"family", family}, {"sequence", to_json(ms)}}; };
    for (const auto& x : spec.points) {
      SetLimits lim = mapping_seq_limits(ms, x);
      cb.check(lim.liminf == lower.eval(x) && lim.limsup == upper.eval(x), [&] {
        Json j = ctx();
        j["x"] = to_json(x);
        return j;
      });
      // Truncated oracle over the tail window, from direct Delta evaluations.
      std::vector<BoxUnion> window;
      for (unsigned k = K / 2; k <= K; ++k) window.push_back(oracle_delta(ms, k).eval(x));
      bool ok;
      if (family == "scaled") {
        Rat worst(0);
        for (const auto& w : window) worst = max(worst, hausdorff(w, lim.liminf).value());
        ok = worst <= kTau;
      } else {
        BoxUnion inf = window.front(), sup = window.front();
        for (const auto& w : window) {
          inf = intersect(inf, w);
          sup = set_union(sup, w);
        }
        ok = inf == lim.liminf && sup == lim.limsup;
      }
      cb.check(ok, [&] {
        Json j = ctx();
        j["x"] = to_json(x);
        j["oracle"] = "truncated window disagrees";
        return j;
      });
    }
    for (const Mapping* f : {&lower, &upper})
      for (const ProbeReport& p : {probe_increasing(*f, spec), probe_coradiant(*f, spec), probe_normal_values(*f, spec)})
        cb.check(p.pass, [&] {
          Json j = ctx();
          j["property"] = p.property;
          j["counterexample"] = *p.counterexample;
          return j;
        });
  }
  cb.details() = {{"instances", count}, {"truncation", K}};
  return cb.finish();
}

}  // namespace

Cases limits_suite(const Config& cfg) {
  Rng r = suite_rng(cfg, "limits");
  Rng rs = r.fork(1), rm = r.fork(2);
  return {set_limit_examples(), set_limits(cfg, rs), mapping_limits(cfg, rm)};
}

// ---------------------------------------------------------------------------

namespace {

Json report_json(const RegularityReport& rep) {
  return Json{{"property", rep.property}, {"verdict", verdict_name(rep.verdict)}, {"worst", num(rep.worst)},
              {"checks", rep.checks}, {"detail", rep.detail ? *rep.detail : ""}};
}

/// Step mapping {(0,{0}), (1,{1})} at its threshold x = 1, approached from
/// below: values jump up at x, so u.s.c. holds while l.s.c. fails.
Cases step_threshold(const RegularityConfig& rc) {
  StepMapping s(1, 1, {{VecPlus{Rat(1)}, BoxUnion::box(VecPlus{Rat(1)})}});
  Mapping f(s);
  VecPlus x{Rat(1)};
  std::vector<std::vector<VecPlus>> below;
  for (unsigned k = 1; k <= rc.depth; ++k) below.push_back({VecPlus{Rat(1) - pow2_neg(k)}});
  RegularityReport u = usc_probe(f, x, below, rc);
  RegularityReport l = lsc_probe(f, x, below, rc, true);
  Case cu{"step-threshold-usc", u.verdict, u.checks, u.verdict == Verdict::Pass ? 0u : 1u, report_json(u), {}};
  Case cl{"step-threshold-lsc", l.verdict, l.checks, l.verdict == Verdict::Fail ? 1u : 0u, report_json(l), {}};
  cu.details["mapping"] = cl.details["mapping"] = to_json(f);
  return {cu, cl};
}

Case lipschitz_examples() {
  CaseBuilder cb("lipschitz-examples");
  StepMapping s(1, 1, {{VecPlus{Rat(1)}, BoxUnion::box(VecPlus{Rat(1)})}, {VecPlus{Rat(2)}, BoxUnion::box(VecPlus{Rat(4)})}});
  LipschitzReport h = lipschitz_probe(HullMapping(s), VecPlus{Rat(1)}, VecPlus{Rat(2)}, Rat(1, 8));
  cb.check(h.inclusion && h.dominated, [&] { return Json{{"m_est", h.m_est.str()}, {"m_theory", h.m_theory.str()}}; });
  Mapping constant(DeltaMapping(VecPlus{Rat(1), Rat(1)}, VecPlus::zeros(2), Rat(1)));
  LipschitzReport c = lipschitz_probe(constant, VecPlus{Rat(1), Rat(1)}, VecPlus{Rat(2), Rat(2)}, Rat(1, 4));
  cb.check(c.m_est.is_zero() && c.inclusion, [&] { return Json{{"constant_m_est", c.m_est.str()}}; });
  cb.details() = {{"hull_1d", {{"m_est", num(h.m_est)}, {"m_theory", num(h.m_theory)}, {"pairs", h.pairs}}},
                  {"constant", {{"m_est", num(c.m_est)}}}};
  return cb.finish();
}

}  // namespace

Cases regularity_suite(const Config& cfg) {
  Rng r = suite_rng(cfg, "regularity");
  RegularityConfig rc{cfg.depth, cfg.tol};
  CaseBuilder usc("usc"), lsc("lsc"), lip("lipschitz");
  Rat worst_usc(0), worst_lsc(0);
  for (std::size_t i = 0; i < cfg.regularity_points; ++i) {
    std::size_t n = pick_dim(r, std::min<std::size_t>(cfg.n_max, 3)), m = pick_dim(r, std::min<std::size_t>(cfg.m_max, 3));
    VecPlus x = random_vec(r, n, {4, 1, 12});
    std::vector<std::pair<std::string, Mapping>> fs{
        {"delta", random_delta(r, n, m)}, {"hull", HullMapping(random_step(r, n, m, 3, 2, {4, 0, 12}, {4, 0, 12}))}};
    for (const auto& [name, f] : fs) {
      RegularityReport u = usc_probe(f, x, rc), l = lsc_probe(f, x, rc);
      worst_usc = max(worst_usc, u.worst);
      worst_lsc = max(worst_lsc, l.worst);
      usc.check(u.verdict == Verdict::Pass, [&, &f = f, &name = name] {
        return Json{{"family", name}, {"mapping", to_json(f)}, {"x", to_json(x)}, {"report", report_json(u)}};
      });
      lsc.check(l.verdict == Verdict::Pass, [&, &f = f, &name = name] {
        return Json{{"family", name}, {"mapping", to_json(f)}, {"x", to_json(x)}, {"report", report_json(l)}};
      });
    }
  }
  usc.details() = {{"points", cfg.regularity_points}, {"depth", cfg.depth}, {"tol", cfg.tol.str()}, {"worst", num(worst_usc)}};
  lsc.details() = {{"points", cfg.regularity_points}, {"depth", cfg.depth}, {"tol", cfg.tol.str()}, {"worst", num(worst_lsc)}};

  Json ests = Json::array();
  for (std::size_t i = 0; i < cfg.lipschitz_instances; ++i) {
    std::size_t n = pick_dim(r, std::min<std::size_t>(cfg.n_max, 2)), m = pick_dim(r, std::min<std::size_t>(cfg.m_max, 2));
    Mapping f = i % 2 == 0 ? Mapping(random_delta(r, n, m))
                           : Mapping(HullMapping(random_step(r, n, m, 3, 2, {4, 0, 12}, {4, 0, 12})));
    Rat step = n == 1 ? Rat(1, 8) : Rat(1, 4);
    LipschitzReport rep = lipschitz_probe(f, VecPlus::filled(n, Rat(1)), VecPlus::filled(n, Rat(2)), step);
    ests.push_back({{"m_est", num(rep.m_est)}, {"m_theory", num(rep.m_theory)}});
    lip.check(rep.inclusion && rep.dominated, [&] {
      return Json{{"mapping", to_json(f)}, {"m_est", num(rep.m_est)}, {"m_theory", num(rep.m_theory)},
                  {"inclusion", rep.inclusion}};
    });
  }
  lip.details() = {{"instances", cfg.lipschitz_instances}, {"box", "[1,2]^n"}, {"estimates", ests}};

  Cases out = step_threshold(rc);
  out.push_back(usc.finish());
  out.push_back(lsc.finish());
  out.push_back(lip.finish());
  out.push_back(lipschitz_examples());
  return out;
}

}  // namespace icr::suite
