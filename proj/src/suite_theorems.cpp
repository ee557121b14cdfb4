#include "icr/cone.hpp"
#include "icr/delta_rep.hpp"
#include "icr/probes.hpp"
#include "suite_common.hpp"

namespace icr::suite {

namespace {

std::size_t small_dim(Rng& r, std::size_t cap) { return pick_dim(r, std::min<std::size_t>(cap, 2)); }

VecPlus graph_point(Rng& r, const BoxUnion& v) {
  const VecPlus& g = v.generators()[r.below(v.generators().size())];
  std::vector<Rat> y;
  for (const auto& e : g.entries()) y.push_back(e * r.grid(4, 0, 4));
  return VecPlus(std::move(y));
}

VecPlus off_graph_value(Rng& r, const BoxUnion& v, std::size_t m) {
  for (int tries = 0; tries < 32; ++tries) {
    VecPlus y = random_vec(r, m, {4, 0, 16});
    if (!member(v, y)) return y;
  }
  return VecPlus::filled(m, v.diameter() + Rat(1));
}

Json check_json(const Theorem1Check& c) {
  return Json{{"x", to_json(c.x)},
              {"y", to_json(c.y)},
              {"alpha", num(c.alpha)},
              {"halvings", c.halvings},
              {"radius", num(c.radius)},
              {"radius_certified", c.radius_certified},
              {"apex_ray_excludes", c.apex_ray_excludes},
              {"fm_excludes", c.fm_excludes},
              {"graph_violations", c.graph_violations},
              {"error", c.error ? *c.error : ""}};
}

Case build_e_example() {
  CaseBuilder cb("build-E-example");
  StepMapping s(1, 1, {{VecPlus{Rat(1)}, BoxUnion::box(VecPlus{Rat(1)})}, {VecPlus{Rat(2)}, BoxUnion::box(VecPlus{Rat(4)})}});
  HullMapping h(s);
  VecPlus x{Rat(1)}, y{Rat(3)};
  ESpec e = build_E(h, x, y, "hull example");
  bool base_in = E_member(e, x, y);
  cb.check(e.cone.radius() == Rat(1, 3), [&] { return Json{{"radius", e.cone.radius().str()}}; });
  // The apex itself stays in E when y != 0; only z + (K \ {0}) and its
  // quadrant translates are cut away.
  cb.check(base_in, [&] { return Json{{"base_point_in_E", base_in}}; });
  // A graph point nearest to (1,3): (4/3, 8/3).
  VecPlus u{Rat(4, 3)}, v{Rat(8, 3)};
  cb.check(graph_member(Mapping(h), u, v) && E_member(e, u, v), [&] { return Json{{"nearest_in_E", false}}; });
  cb.details() = {{"E", to_json(e)}, {"radius", num(e.cone.radius())}, {"base_point_in_E", base_in}};
  return cb.finish();
}

}  // namespace

Cases theorem1_suite(const Config& cfg) {
  Rng r = suite_rng(cfg, "theorem1");
  CaseBuilder wit("witnesses"), fault("fault-injection-radius");
  Theorem1Options opt;
  if (cfg.fault == Fault::Radius) opt.radius_multiplier = Rat(2);
  Theorem1Options doubled;
  doubled.radius_multiplier = Rat(2);
  unsigned max_halvings = 0;
  std::size_t graph_checks = 0;
  for (std::size_t mi = 0; mi < cfg.t1_mappings; ++mi) {
    std::size_t n = small_dim(r, cfg.n_max), m = small_dim(r, cfg.m_max);
    HullMapping hull(random_step(r, n, m, 3, 2, {4, 0, 12}, {4, 0, 12}));
    Mapping f(hull);
    std::vector<std::pair<VecPlus, VecPlus>> graph;
    for (std::size_t g = 0; g < cfg.t1_graph_points; ++g) {
      VecPlus x = random_vec(r, n, {4, 0, 12});
      graph.emplace_back(x, graph_point(r, f.eval(x)));
    }
    for (std::size_t p = 0; p < cfg.t1_points; ++p) {
      VecPlus x = random_vec(r, n, {4, 0, 12});
      VecPlus y = off_graph_value(r, f.eval(x), m);
      Theorem1Check c = theorem1_witness(hull, x, y, graph, opt);
      max_halvings = std::max(max_halvings, c.halvings);
      graph_checks += c.graph_points;
      wit.check(c.pass(), [&] {
        Json j = check_json(c);
        j["mapping"] = to_json(f);
        return j;
      });
      if (p == 0 && mi < 10) {
        Theorem1Check bad = theorem1_witness(hull, x, y, graph, doubled);
        fault.check(!bad.pass(), [&] {
          Json j = check_json(bad);
          j["mapping"] = to_json(f);
          return j;
        });
      }
    }
  }
  wit.details() = {{"mappings", cfg.t1_mappings},
                   {"points_per_mapping", cfg.t1_points},
                   {"graph_points_per_mapping", cfg.t1_graph_points},
                   {"graph_membership_checks", graph_checks},
                   {"max_halvings", max_halvings},
                   {"radius_multiplier", opt.radius_multiplier.str()}};
  fault.details() = {{"radius_multiplier", "2"}, {"expectation", "every corrupted instance is rejected"}};
  return {build_e_example(), wit.finish(), fault.finish()};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<VecPlus> anchor_grid(std::size_t n, const Rat& lo, const Rat& hi, const Rat& h) {
  std::vector<Rat> axis;
  for (Rat v = lo; v <= hi; v += h) axis.push_back(v);
  std::vector<VecPlus> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Rat> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(axis[idx[i]]);
    out.emplace_back(std::move(p));
    std::size_t i = 0;
    while (i < n && ++idx[i] == axis.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Halves (k, c) of the cube triple that is binding at the anchor, pushing
/// its level below the values there.
TSet lower_c(const Mapping& f, const TSet& t, const VecPlus& anchor) {
  std::vector<Triple> tr = t.triples();
  Rat cube = f.eval(anchor).diameter();
  for (auto& x : tr)
    if (x.l.max_entry() == Rat(1) && x.l.sum() == Rat(1) && h_plus(x.k, x.c, anchor) == cube) {
      x.k = x.k.scaled(Rat(1, 2));
      x.c = x.c / Rat(2);
      break;
    }
  return TSet(t.n(), t.m(), std::move(tr));
}

void forward(const Config& cfg, Rng& r, CaseBuilder& incl, CaseBuilder& anchors_cb, CaseBuilder& mono,
             CaseBuilder& fault, Json& gaps) {
  const std::vector<Rat> spacing{Rat(5, 2), Rat(1, 2), Rat(1, 8)};
  for (std::size_t mi = 0; mi < cfg.t2_mappings; ++mi) {
    std::size_t n = small_dim(r, cfg.n_max), m = small_dim(r, cfg.m_max);
    Mapping f(HullMapping(random_box_step(r, n, m, 3)));
    std::vector<VecPlus> samples;
    for (std::size_t s = 0; s < cfg.t2_samples; ++s) samples.push_back(random_vec(r, n, {16, 8, 48}));
    std::vector<VecPlus> probe = anchor_grid(n, Rat(1, 2), Rat(3), Rat(1, 2));
    probe.insert(probe.end(), samples.begin(), samples.end());

    std::vector<std::vector<Rat>> level_gaps;
    Json trace = Json::array();
    for (std::size_t level = 0; level < spacing.size(); ++level) {
      std::vector<VecPlus> anchors = anchor_grid(n, Rat(1, 2), Rat(3), spacing[level]);
      std::vector<VecPlus> duals = unit_duals(m);
      if (level > 0)
        for (const auto& a : anchors)
          for (auto& l : adaptive_duals(f.eval(a), 16))
            if (std::find(duals.begin(), duals.end(), l) == duals.end()) duals.push_back(std::move(l));
      TSet t = synthesize_T(f, anchors, level == 0 ? unit_duals(m) : duals, probe);
      if (cfg.fault == Fault::LowerC) t = lower_c(f, t, anchors.front());
      if (level == 0 && mi < 10) {
        TSet bad = lower_c(f, t, anchors.front());
        bool detected = false;
        for (const auto& a : anchors) detected = detected || !intersection_gap(f, bad, a).inclusion;
        fault.check(detected, [&] { return Json{{"mapping", to_json(f)}, {"T", to_json(bad)}}; });
      }
      for (const auto& a : anchors) {
        GapResult g = intersection_gap(f, t, a);
        incl.check(g.inclusion, [&] { return Json{{"mapping", to_json(f)}, {"x", to_json(a)}, {"level", level}}; });
        if (level == 0)
          anchors_cb.check(g.gap == ExtRat(Rat(0)), [&] {
            return Json{{"mapping", to_json(f)}, {"anchor", to_json(a)}, {"gap", num(g.gap)}};
          });
      }
      std::vector<Rat> gs;
      Rat worst_rel(0);
      for (const auto& x : samples) {
        GapResult g = intersection_gap(f, t, x);
        incl.check(g.inclusion, [&] { return Json{{"mapping", to_json(f)}, {"x", to_json(x)}, {"level", level}}; });
        gs.push_back(g.gap.value());
        Rat diam = f.eval(x).diameter();
        if (!diam.is_zero()) worst_rel = max(worst_rel, g.gap.value() / diam);
      }
      level_gaps.push_back(gs);
      trace.push_back({{"level", level}, {"anchors", anchors.size()}, {"triples", t.triples().size()},
                       {"worst_relative_gap", num(worst_rel)}});
    }
    for (std::size_t s = 0; s < samples.size(); ++s) {
      for (std::size_t level = 1; level < spacing.size(); ++level)
        mono.check(level_gaps[level][s] <= level_gaps[level - 1][s], [&] {
          return Json{{"mapping", to_json(f)}, {"x", to_json(samples[s])}, {"level", level},
                      {"gap_before", num(level_gaps[level - 1][s])}, {"gap_after", num(level_gaps[level][s])}};
        });
      Rat diam = f.eval(samples[s]).diameter();
      mono.check(level_gaps.back()[s] * Rat(10) <= diam, [&] {
        return Json{{"mapping", to_json(f)}, {"x", to_json(samples[s])}, {"final_gap", num(level_gaps.back()[s])},
                    {"diameter", num(diam)}};
      });
    }
    gaps.push_back(trace);
  }
}

Case converse(const Config& cfg, Rng& r) {
  CaseBuilder cb("converse");
  RegularityConfig rc{cfg.depth, cfg.tol};
  for (std::size_t i = 0; i < cfg.t2_converse; ++i) {
    std::size_t n = small_dim(r, cfg.n_max), m = pick_dim(r, std::min<std::size_t>(cfg.m_max, 3));
    std::vector<Triple> triples;
    for (std::size_t k = 0; k < m; ++k) triples.push_back({VecPlus::unit(m, k), random_vec(r, n, {4, 0, 8}), r.grid(4, 0, 8)});
    for (int k = 0; k < 5; ++k) {
      VecPlus l = random_vec(r, m, {4, 0, 8});
      while (l.is_zero()) l = random_vec(r, m, {4, 0, 8});
      triples.push_back({l, random_vec(r, n, {4, 0, 8}), r.grid(4, 0, 8)});
    }
    TSet t(n, m, triples);
    Mapping f = t.as_mapping();
    SampleSpec s;
    for (int k = 0; k < 6; ++k) s.points.push_back(random_vec(r, n, {4, 0, 12}));
    for (int k = 0; k < 4; ++k) {
      VecPlus x = random_vec(r, n, {4, 0, 8});
      s.comparable.emplace_back(x, x + random_vec(r, n, {4, 0, 8}));
    }
    s.shrink = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    s.stretch = {Rat(3, 2), Rat(3)};
    for (const ProbeReport& p : {probe_increasing(f, s), probe_coradiant(f, s), probe_normal_values(f, s)})
      cb.check(p.pass, [&] { return Json{{"T", to_json(t)}, {"property", p.property}, {"counterexample", *p.counterexample}}; });
    for (const auto& x : s.points) {
      BoxUnion v = f.eval(x);
      cb.check(!v.empty() && member(v, VecPlus::zeros(m)), [&] { return Json{{"T", to_json(t)}, {"x", to_json(x)}}; });
    }
    VecPlus x = random_vec(r, n, {4, 1, 12});
    RegularityReport u = usc_probe(f, x, rc);
    cb.check(u.verdict == Verdict::Pass, [&] { return Json{{"T", to_json(t)}, {"usc_at", to_json(x)}, {"worst", num(u.worst)}}; });
  }
  cb.details() = {{"random_T", cfg.t2_converse}, {"extra_triples", 5}};
  return cb.finish();
}

Case scalar_bridge(const Config& cfg, Rng& r) {
  CaseBuilder cb("scalar-bridge");
  for (std::size_t i = 0; i < cfg.bridge_instances; ++i) {
    std::size_t n = pick_dim(r, std::min<std::size_t>(cfg.n_max, 3));
    DeltaMapping d(VecPlus{r.grid(4, 1, 12)}, random_vec(r, n, {4, 0, 8}), r.grid(4, 0, 8));
    auto [kb, cb_] = scalar_delta_bridge(d);
    // Independent reading of the bridge: divide by max(l, 1).
    Rat div = max(d.l()[0], Rat(1));
    bool params = kb == d.k().scaled(Rat(1) / div) && cb_ == d.c() / div;
    cb.check(params, [&] { return Json{{"delta", to_json(Mapping(d))}}; });
    for (long j = 0; j <= 32; ++j) {
      std::vector<Rat> p;
      for (std::size_t k = 0; k < n; ++k) p.push_back(k % 2 == 0 ? Rat(j, 8) : Rat(32 - j, 8));
      VecPlus x(std::move(p));
      BoxUnion v = d.eval(x);
      cb.check(v == BoxUnion::box(VecPlus{h_plus(kb, cb_, x)}),
               [&] { return Json{{"delta", to_json(Mapping(d))}, {"x", to_json(x)}, {"value", to_json(v)}}; });
    }
  }
  cb.details() = {{"instances", cfg.bridge_instances}, {"grid_points", 33}};
  return cb.finish();
}

}  // namespace

Cases theorem2_suite(const Config& cfg) {
  Rng r = suite_rng(cfg, "theorem2");
  Rng rf = r.fork(1), rc = r.fork(2), rb = r.fork(3);
  CaseBuilder incl("forward-inclusion"), anchors("anchor-gap"), mono("refinement"), fault("fault-injection-lower-c");
  Json gaps = Json::array();
  forward(cfg, rf, incl, anchors, mono, fault, gaps);
  mono.details() = {{"anchor_spacing", {"5/2", "1/2", "1/8"}}, {"box", "[1/2,3]^n"}, {"per_mapping", gaps}};
  anchors.details() = {{"duals", "unit vectors"}, {"values", "boxes"}};
  fault.details() = {{"corruption", "binding cube triple with (k, c) halved"}};
  return {incl.finish(), anchors.finish(), mono.finish(), fault.finish(), converse(cfg, rc), scalar_bridge(cfg, rb)};
}

}  // namespace icr::suite
