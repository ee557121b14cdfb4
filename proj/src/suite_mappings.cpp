#include "icr/probes.hpp"
#include "suite_common.hpp"

namespace icr::suite {

namespace {

std::size_t dim_cap(std::size_t cap) { return std::min<std::size_t>(cap, 3); }

/// Exact Delta majorant of a step mapping: for each piece pick one
/// coordinate of its threshold's support and let k carry the piece's level
/// from there; pieces with a zero threshold go into c.
DeltaMapping delta_majorant(Rng& r, const StepMapping& f, const VecPlus& l) {
  std::vector<Rat> k(f.n(), Rat(0));
  Rat c(0);
  for (const auto& p : f.pieces()) {
    Rat level = max(p.value.diameter(), support(p.value, l));
    auto supp = support_index(p.threshold);
    if (supp.empty()) {
      c = max(c, level);
      continue;
    }
    std::size_t i = supp[r.below(supp.size())];
    k[i] = max(k[i], level / p.threshold[i]);
  }
  return DeltaMapping(l, VecPlus(std::move(k)), c);
}

std::vector<Rat> lambda_grid(const Rat& top, unsigned level) {
  std::vector<Rat> out;
  Rat h = pow2_neg(level);
  // One point past the top so that every breakpoint has a grid point above it.
  for (Rat l(1); l <= top + h; l += h) out.push_back(l);
  return out;
}

Case hull_example() {
  CaseBuilder cb("example-1d");
  StepMapping s(1, 1, {{VecPlus{Rat(1)}, BoxUnion::box(VecPlus{Rat(1)})}, {VecPlus{Rat(2)}, BoxUnion::box(VecPlus{Rat(4)})}});
  HullMapping h(s);
  BoxUnion at1 = h.eval(VecPlus{Rat(1)});
  ExtRat d = dist_to_graph(h, VecPlus{Rat(1)}, VecPlus{Rat(3)});
  cb.check(at1 == BoxUnion::box(VecPlus{Rat(2)}), [&] { return Json{{"hull(1)", to_json(at1)}}; });
  cb.check(d == ExtRat(Rat(1, 3)), [&] { return Json{{"dist", d.str()}}; });
  cb.details() = {{"mapping", to_json(Mapping(h))}, {"hull(1)", to_json(at1)}, {"dist((1),(3))", num(d)}};
  return cb.finish();
}

}  // namespace

Cases hull_suite(const Config& cfg) {
  Rng r = suite_rng(cfg, "hull");
  CaseBuilder inner("oracle-inner"), conv("oracle-convergence"), corad("coradiance"), minimal("minimality");
  const unsigned first = 5, last = first + static_cast<unsigned>(cfg.hull_refinements);
  Json traces = Json::array();
  std::size_t halving_violations = 0;
  for (std::size_t mi = 0; mi < cfg.hull_mappings; ++mi) {
    std::size_t n = pick_dim(r, dim_cap(cfg.n_max)), m = pick_dim(r, dim_cap(cfg.m_max));
    StepMapping step = random_step(r, n, m, 3, 2, {4, 0, 12}, {4, 0, 12});
    HullMapping hull(step);
    Mapping f(step), fh(hull);
    std::vector<VecPlus> xs;
    for (std::size_t s = 0; s < cfg.hull_samples; ++s) xs.push_back(random_vec(r, n, {4, 4, 12}));

    // Gap between the exact value and the lambda-grid oracle, per level.
    std::vector<Rat> worst;
    Json trace = Json::array();
    for (unsigned level = first; level <= last; ++level) {
      Rat w(0);
      for (const auto& x : xs) {
        Rat top(1);
        for (const auto& p : step.pieces())
          for (std::size_t i = 0; i < n; ++i) top = max(top, p.threshold[i] / x[i]);
        BoxUnion exact = hull.eval(x);
        BoxUnion approx = hull_oracle(f, x, lambda_grid(top, level));
        inner.check(subset(approx, exact), [&] {
          return Json{{"mapping", to_json(f)}, {"x", to_json(x)}, {"level", level}, {"oracle", to_json(approx)}};
        });
        Rat gap = hausdorff(exact, approx).value();
        w = max(w, gap);
        if (level == last)
          conv.check(gap < exact.diameter() * pow2_neg(10) || (gap.is_zero() && exact.diameter().is_zero()), [&] {
            return Json{{"mapping", to_json(f)}, {"x", to_json(x)}, {"final_gap", num(gap)},
                        {"diameter", num(exact.diameter())}};
          });
      }
      worst.push_back(w);
      trace.push_back(num(w));
    }
    for (std::size_t k = 1; k < worst.size(); ++k) {
      bool halved = worst[k] * Rat(2) <= worst[k - 1];
      if (!halved) ++halving_violations;
      conv.check(halved, [&] {
        return Json{{"mapping", to_json(f)}, {"refinement", k}, {"gap_before", num(worst[k - 1])},
                    {"gap_after", num(worst[k])}};
      });
    }
    traces.push_back(trace);

    SampleSpec spec{xs, {}, {Rat(1, 3), Rat(1, 2), Rat(3, 4)}, {Rat(3, 2), Rat(2)}};
    ProbeReport pr = probe_coradiant(fh, spec);
    corad.check(pr.pass, [&] { return Json{{"mapping", to_json(f)}, {"counterexample", *pr.counterexample}}; });

    // Co-radiant majorants of F: scaled hulls, exact Delta majorants and
    // their intersection, and the hull of a pointwise larger step mapping.
    std::vector<Mapping> majorants{Mapping::scaled(Rat(3, 2), fh)};
    for (int j = 0; j < 2; ++j) {
      VecPlus l = random_vec(r, m, {4, 1, 8});
      majorants.emplace_back(delta_majorant(r, step, l));
    }
    majorants.push_back(Mapping::intersection({majorants[1], majorants[2]}));
    std::vector<StepPiece> bigger;
    for (const auto& p : step.pieces()) bigger.push_back({p.threshold, scale(Rat(2), p.value)});
    majorants.emplace_back(HullMapping(StepMapping(n, m, bigger)));
    for (const auto& g : majorants)
      for (const auto& x : xs) {
        BoxUnion gx = g.eval(x);
        minimal.check(subset(f.eval(x), gx) && subset(hull.eval(x), gx), [&] {
          return Json{{"mapping", to_json(f)}, {"majorant", to_json(g)}, {"x", to_json(x)}};
        });
      }
  }
  conv.details() = {{"levels", "lambda step 2^-k, k = " + std::to_string(first) + ".." + std::to_string(last)},
                    {"worst_gap_per_level", traces},
                    {"halving_violations", halving_violations}};
  inner.details() = {{"mappings", cfg.hull_mappings}, {"samples", cfg.hull_samples}};
  return {hull_example(), inner.finish(), conv.finish(), corad.finish(), minimal.finish()};
}

// ---------------------------------------------------------------------------

namespace {

struct Family {
  std::string name;
  Mapping f;
  bool icr;
};

Family random_family(Rng& r, std::size_t n, std::size_t m, std::size_t idx) {
  switch (idx % 6) {
    case 0: return {"step", random_step(r, n, m, 3, 2, {4, 0, 8}, {4, 0, 8}), false};
    case 1: return {"hull", HullMapping(random_step(r, n, m, 3, 2, {4, 0, 8}, {4, 0, 8})), true};
    case 2: return {"delta", random_delta(r, n, m), true};
    case 3: return {"delta-intersection", Mapping::intersection({random_delta(r, n, m), random_delta(r, n, m)}), true};
    case 4: return {"delta-union", Mapping::set_union({random_delta(r, n, m), random_delta(r, n, m)}), true};
    default: {
      if (m != 1) return {"delta", random_delta(r, n, m), true};
      std::vector<HTerm> terms;
      for (int t = 0; t < 2; ++t) terms.push_back({random_vec(r, n, {4, 0, 8}), r.grid(4, 0, 8), false});
      return {"embed", Mapping::embed(MinOfH{terms}), true};
    }
  }
}

}  // namespace

Cases graph_chars(const Config& cfg) {
  Rng r = suite_rng(cfg, "graph-chars");
  CaseBuilder agree("characterizations-agree"), icr_props("icr-families");
  Json per_family = Json::object();
  for (std::size_t i = 0; i < cfg.graph_mappings; ++i) {
    std::size_t n = pick_dim(r, dim_cap(cfg.n_max)), m = pick_dim(r, dim_cap(cfg.m_max));
    Family fam = random_family(r, n, m, i);
    SampleSpec s;
    for (int k = 0; k < 6; ++k) s.points.push_back(random_vec(r, n, {4, 0, 12}));
    for (int k = 0; k < 4; ++k) {
      VecPlus x = random_vec(r, n, {4, 0, 8});
      s.comparable.emplace_back(x, x + random_vec(r, n, {4, 0, 8}));
    }
    s.shrink = {Rat(1, 4), Rat(1, 2), Rat(3, 4)};
    std::vector<VecPlus> dx{VecPlus::zeros(n), VecPlus::filled(n, Rat(1, 2))}, dy{VecPlus::zeros(m)};
    for (int k = 0; k < 2; ++k) {
      dx.push_back(random_vec(r, n, {4, 0, 4}));
      dy.push_back(random_vec(r, m, {4, 0, 4}));
    }
    // Off-graph points: a generator pushed up in one coordinate.
    std::vector<std::pair<VecPlus, VecPlus>> off;
    for (const auto& x : s.points) {
      BoxUnion v = fam.f.eval(x);
      const VecPlus& g = v.generators()[r.below(v.generators().size())];
      std::vector<Rat> y(g.entries().begin(), g.entries().end());
      y[r.below(m)] += r.grid(4, 1, 4);
      off.emplace_back(x, VecPlus(std::move(y)));
    }
    GraphCharacterization gc = check_graph_characterizations(fam.f, s, off, dx, dy);
    auto ctx = [&] { return Json{{"family", fam.name}, {"mapping", to_json(fam.f)}}; };
    agree.check(gc.agree, [&] {
      Json j = ctx();
      j["disagreement"] = *gc.disagreement;
      return j;
    });
    if (fam.icr) {
      for (const ProbeReport* p : {&gc.increasing_graph, &gc.normal_graph, &gc.radiant_graph, &gc.quadrant_disjoint,
                                   &gc.increasing_map, &gc.normal_map, &gc.coradiant_map})
        icr_props.check(p->pass, [&] {
          Json j = ctx();
          j["property"] = p->property;
          j["counterexample"] = *p->counterexample;
          return j;
        });
    }
    per_family[fam.name] = per_family.value(fam.name, 0) + 1;
  }
  agree.details() = {{"mappings", cfg.graph_mappings}, {"families", per_family}};
  return {agree.finish(), icr_props.finish()};
}

}  // namespace icr::suite
