#pragma once

#include "icr/mapping.hpp"

#include <optional>
#include <string>
#include <vector>

namespace icr {

/// Outcome of an exact property probe over a finite sample.
struct ProbeReport {
  std::string property;
  bool pass = true;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      counterexample = what;
    }
  }
};

struct SampleSpec {
  std::vector<VecPlus> points;
  /// Pairs (x, x') with x <= x'.
  std::vector<std::pair<VecPlus, VecPlus>> comparable;
  /// t in (0, 1]
  std::vector<Rat> shrink;
  /// lambda >= 1
  std::vector<Rat> stretch;
};

/// x <= x' implies F(x) subset F(x').
ProbeReport probe_increasing(const Mapping& f, const SampleSpec& s);

/// Checks t F(x) subset F(t x) and F(lambda x) subset lambda F(x) on every
/// sample. The two forms are equivalent; each shrink test at x is mirrored by
/// the stretch test at t x with lambda = 1/t, and any disagreement between
/// the mirrored verdicts is reported as a failure of its own.
ProbeReport probe_coradiant(const Mapping& f, const SampleSpec& s);

/// Every value is downward closed: y in F(x), 0 <= y' <= y implies y' in F(x).
ProbeReport probe_normal_values(const Mapping& f, const SampleSpec& s);

/// Graph-side characterizations, each paired with its mapping-side property
/// so that agreement can be asserted per sample.
struct GraphCharacterization {
  ProbeReport increasing_graph;   // gr(F) + orthant x {0} stays in gr(F)
  ProbeReport normal_graph;       // moving y down stays in gr(F)
  ProbeReport radiant_graph;      // (t x, t y) stays in gr(F)
  ProbeReport quadrant_disjoint;  // no graph point in (x,y) + (-orthant) x orthant, (x,y) off-graph
  ProbeReport increasing_map;
  ProbeReport normal_map;
  ProbeReport coradiant_map;
  /// Per-sample agreement of each characterization with its mapping property.
  bool agree = true;
  std::optional<std::string> disagreement;
};

/// `off_graph` lists points (x, y) outside the graph used for the
/// quadrant-disjointness test; `offsets` are the nonnegative moves applied.
GraphCharacterization check_graph_characterizations(const Mapping& f, const SampleSpec& s,
                                                    const std::vector<std::pair<VecPlus, VecPlus>>& off_graph,
                                                    const std::vector<VecPlus>& x_offsets,
                                                    const std::vector<VecPlus>& y_offsets);

}  // namespace icr
