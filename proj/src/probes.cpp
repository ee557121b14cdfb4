#include "icr/probes.hpp"

namespace icr {

namespace {

std::vector<VecPlus> below(const VecPlus& g, const std::vector<VecPlus>& offsets) {
  std::vector<VecPlus> out{VecPlus::zeros(g.dim()), g};
  for (const auto& d : offsets) {
    if (d.dim() != g.dim()) continue;
    std::vector<Rat> e;
    for (std::size_t i = 0; i < g.dim(); ++i) e.push_back(pos_part(g[i] - d[i]));
    out.emplace_back(std::move(e));
  }
  return out;
}

std::string at(const VecPlus& x) { return "x=" + x.str(); }

}  // namespace

ProbeReport probe_increasing(const Mapping& f, const SampleSpec& s) {
  ProbeReport r;
  r.property = "increasing";
  for (const auto& [x, xp] : s.comparable) {
    if (!leq(x, xp)) throw PreconditionError("comparable sample pair is not ordered");
    r.record(subset(f.eval(x), f.eval(xp)), "F(" + x.str() + ") not in F(" + xp.str() + ")");
  }
  return r;
}

ProbeReport probe_coradiant(const Mapping& f, const SampleSpec& s) {
  ProbeReport r;
  r.property = "coradiant";
  for (const auto& x : s.points) {
    BoxUnion fx = f.eval(x);
    for (const auto& t : s.shrink) {
      if (t.sign() <= 0 || t > Rat(1)) throw PreconditionError("shrink factor outside (0,1]");
      VecPlus tx = x.scaled(t);
      BoxUnion ftx = f.eval(tx);
      bool shrink_form = subset(scale(t, fx), ftx);
      // Mirror: F(lambda * tx) subset lambda F(tx) with lambda = 1/t.
      Rat lambda = Rat(1) / t;
      bool stretch_form = subset(f.eval(tx.scaled(lambda)), scale(lambda, ftx));
      r.record(shrink_form, at(x) + " t=" + t.str() + ": tF(x) not in F(tx)");
      r.record(shrink_form == stretch_form, at(x) + " t=" + t.str() + ": equivalent co-radiance forms disagree");
    }
    for (const auto& lambda : s.stretch) {
      if (lambda < Rat(1)) throw PreconditionError("stretch factor below 1");
      r.record(subset(f.eval(x.scaled(lambda)), scale(lambda, fx)),
               at(x) + " lambda=" + lambda.str() + ": F(lambda x) not in lambda F(x)");
    }
  }
  return r;
}

ProbeReport probe_normal_values(const Mapping& f, const SampleSpec& s) {
  ProbeReport r;
  r.property = "normal values";
  for (const auto& x : s.points) {
    BoxUnion fx = f.eval(x);
    for (const auto& g : fx.generators())
      for (const auto& t : s.shrink) {
        // Shrink a single coordinate, then all of them.
        for (std::size_t i = 0; i < g.dim(); ++i) {
          std::vector<Rat> e(g.entries().begin(), g.entries().end());
          e[i] *= t;
          r.record(member(fx, VecPlus(e)), at(x) + ": value not downward closed below " + g.str());
        }
        r.record(member(fx, g.scaled(t)), at(x) + ": value not downward closed below " + g.str());
      }
  }
  return r;
}

GraphCharacterization check_graph_characterizations(const Mapping& f, const SampleSpec& s,
                                                    const std::vector<std::pair<VecPlus, VecPlus>>& off_graph,
                                                    const std::vector<VecPlus>& x_offsets,
                                                    const std::vector<VecPlus>& y_offsets) {
  GraphCharacterization gc;
  gc.increasing_graph.property = "graph + orthant x {0} in graph";
  gc.normal_graph.property = "graph closed under lowering y";
  gc.radiant_graph.property = "graph radiant";
  gc.quadrant_disjoint.property = "graph misses lower-left/upper quadrant of off-graph points";
  gc.increasing_map.property = "increasing";
  gc.normal_map.property = "normal values";
  gc.coradiant_map.property = "coradiant";

  auto disagree = [&](const std::string& what) {
    if (gc.agree) gc.disagreement = what;
    gc.agree = false;
  };

  std::vector<std::pair<VecPlus, VecPlus>> pairs = s.comparable;
  for (const auto& x : s.points)
    for (const auto& d : x_offsets) pairs.emplace_back(x, x + d);

  for (const auto& [x, xp] : pairs) {
    BoxUnion fx = f.eval(x);
    bool map_ok = subset(fx, f.eval(xp));
    bool graph_ok = true;
    for (const auto& y : fx.generators()) graph_ok = graph_ok && graph_member(f, xp, y);
    gc.increasing_map.record(map_ok, "F(" + x.str() + ") not in F(" + xp.str() + ")");
    gc.increasing_graph.record(graph_ok, "translate of graph over " + x.str() + " leaves graph");
    if (map_ok != graph_ok) disagree("increasing vs graph translate at " + x.str());
  }

  for (const auto& x : s.points) {
    BoxUnion fx = f.eval(x);
    for (const auto& g : fx.generators())
      for (const auto& y : below(g, y_offsets)) {
        bool map_ok = member(fx, y);
        bool graph_ok = graph_member(f, x, y);
        gc.normal_map.record(map_ok, at(x) + ": value not normal below " + g.str());
        gc.normal_graph.record(graph_ok, at(x) + ": lowered point " + y.str() + " leaves graph");
        if (map_ok != graph_ok) disagree("normal values vs graph lowering at " + x.str());
      }
    for (const auto& t : s.shrink) {
      VecPlus tx = x.scaled(t);
      bool map_ok = subset(scale(t, fx), f.eval(tx));
      bool graph_ok = true;
      for (const auto& g : fx.generators()) graph_ok = graph_ok && graph_member(f, tx, g.scaled(t));
      gc.coradiant_map.record(map_ok, at(x) + " t=" + t.str() + ": tF(x) not in F(tx)");
      gc.radiant_graph.record(graph_ok, at(x) + " t=" + t.str() + ": scaled graph point leaves graph");
      if (map_ok != graph_ok) disagree("co-radiance vs radiant graph at " + x.str());
    }
  }

  for (const auto& [x, y] : off_graph) {
    if (graph_member(f, x, y)) throw PreconditionError("off-graph sample lies on the graph");
    for (const auto& dx : x_offsets)
      for (const auto& dy : y_offsets) {
        std::vector<Rat> ue;
        for (std::size_t i = 0; i < x.dim(); ++i) ue.push_back(pos_part(x[i] - dx[i]));
        VecPlus u(ue);
        VecPlus v = y + dy;
        bool graph_ok = !graph_member(f, u, v);
        gc.quadrant_disjoint.record(graph_ok, "(" + u.str() + "," + v.str() + ") on graph below-right of (" +
                                                  x.str() + "," + y.str() + ")");
        // A graph point there forces F(u) not in F(x): v in F(u) but y <= v is not in F(x).
        if (!graph_ok && subset(f.eval(u), f.eval(x))) disagree("quadrant test vs increasing at " + x.str());
      }
  }
  return gc;
}

}  // namespace icr
