#include "icr/delta_rep.hpp"

#include <algorithm>

namespace icr {

TSet::TSet(std::size_t n, std::size_t m, std::vector<Triple> triples) : n_(n), m_(m), triples_(std::move(triples)) {
  if (triples_.empty()) throw PreconditionError("T must be nonempty");
  std::vector<bool> has_unit(m, false);
  for (const auto& t : triples_) {
    if (t.l.dim() != m || t.k.dim() != n) throw DimensionError("triple dimensions disagree with T");
    if (t.l.is_zero()) throw PreconditionError("triple with l = 0");
    if (t.c.sign() < 0) throw PreconditionError("triple with c < 0");
    for (std::size_t i = 0; i < m; ++i)
      if (t.l == VecPlus::unit(m, i)) has_unit[i] = true;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!has_unit[i]) throw PreconditionError("T lacks a triple with l = e^" + std::to_string(i + 1));
}

Mapping TSet::as_mapping() const {
  std::vector<Mapping> parts;
  for (const auto& t : triples_) parts.emplace_back(t.delta());
  return Mapping::intersection(std::move(parts));
}

BoxUnion TSet::eval(const VecPlus& x) const {
  BoxUnion acc = triples_.front().delta().eval(x);
  for (std::size_t i = 1; i < triples_.size(); ++i) acc = intersect(acc, triples_[i].delta().eval(x));
  return acc;
}

namespace {

void verify_majorant(const Mapping& f, const VecPlus& l, const VecPlus& k, const Rat& c,
                     const std::vector<VecPlus>& grid, bool with_cube) {
  for (const auto& x : grid) {
    Rat h = h_plus(k, c, x);
    BoxUnion v = f.eval(x);
    if (h < support(v, l))
      throw PreconditionError("majorant check failed at " + x.str() + ": input is not ICR");
    if (with_cube && h < v.diameter())
      throw PreconditionError("cube majorant check failed at " + x.str() + ": input is not ICR");
  }
}

Majorant anchored(const Rat& value, const VecPlus& x0) {
  std::vector<Rat> k;
  for (std::size_t i = 0; i < x0.dim(); ++i) k.push_back(value / x0[i]);
  return {VecPlus(std::move(k)), value};
}

}  // namespace

Majorant elementary_majorant(const Mapping& f, const VecPlus& l, const VecPlus& x0,
                             const std::vector<VecPlus>& probe_grid) {
  if (!x0.strictly_positive()) throw PreconditionError("anchor " + x0.str() + " is not strictly positive");
  Majorant out = anchored(psi(f, l, x0), x0);
  verify_majorant(f, l, out.k, out.c, probe_grid, false);
  return out;
}

TSet synthesize_T(const Mapping& f, const std::vector<VecPlus>& anchors, const std::vector<VecPlus>& duals,
                  const std::vector<VecPlus>& probe_grid) {
  if (anchors.empty()) throw PreconditionError("no anchors");
  for (std::size_t i = 0; i < f.m(); ++i)
    if (std::find(duals.begin(), duals.end(), VecPlus::unit(f.m(), i)) == duals.end())
      throw PreconditionError("dual set lacks a unit vector");
  std::vector<Triple> out;
  auto push = [&](Triple t) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  };
  for (const auto& x0 : anchors) {
    if (!x0.strictly_positive()) throw PreconditionError("anchor " + x0.str() + " is not strictly positive");
    BoxUnion value = f.eval(x0);
    Rat cube = value.diameter();
    for (const auto& l : duals) {
      if (l.is_zero()) throw PreconditionError("zero dual");
      Rat at_anchor = support(value, l);
      bool unit = std::count_if(l.entries().begin(), l.entries().end(), [](const Rat& v) { return !v.is_zero(); }) == 1 &&
                  l.max_entry() == Rat(1);
      if (unit || at_anchor.is_zero()) {
        // Cube triple: majorizes the sup-norm of the values, hence psi_l too.
        Majorant mj = anchored(cube, x0);
        verify_majorant(f, l, mj.k, mj.c, probe_grid, true);
        push({l, mj.k, mj.c});
      }
      if (at_anchor.is_zero()) continue;
      VecPlus scaled = at_anchor < cube ? l.scaled(cube / at_anchor) : l;
      Majorant mj = elementary_majorant(f, scaled, x0, probe_grid);
      verify_majorant(f, scaled, mj.k, mj.c, probe_grid, true);
      push({scaled, mj.k, mj.c});
    }
  }
  return TSet(f.n(), f.m(), std::move(out));
}

std::vector<VecPlus> unit_duals(std::size_t m) {
  std::vector<VecPlus> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(VecPlus::unit(m, i));
  return out;
}

std::vector<VecPlus> adaptive_duals(const BoxUnion& value, std::size_t max_duals) {
  std::vector<VecPlus> out;
  const auto& gens = value.generators();
  const std::size_t m = value.dim(), g = gens.size();
  if (g == 0) return out;
  std::vector<std::size_t> assign(g, 0);
  const Rat bump = Rat(65, 64);
  while (out.size() < max_duals) {
    std::vector<Rat> corner(m, Rat(0));
    std::vector<bool> used(m, false);
    for (std::size_t j = 0; j < g; ++j) {
      used[assign[j]] = true;
      corner[assign[j]] = max(corner[assign[j]], gens[j][assign[j]]);
    }
    bool positive = true;
    for (std::size_t i = 0; i < m; ++i)
      if (used[i] && corner[i].is_zero()) positive = false;
    if (positive) {
      std::vector<Rat> p(m, Rat(0));
      for (std::size_t i = 0; i < m; ++i)
        if (used[i]) p[i] = corner[i] * bump;
      VecPlus l = separate(value, VecPlus(p));
      l = l.scaled(Rat(1) / l.max_entry());
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
    }
    // Next assignment in lexicographic order.
    std::size_t j = 0;
    while (j < g && ++assign[j] == m) assign[j++] = 0;
    if (j == g) break;
  }
  return out;
}

GapResult intersection_gap(const Mapping& f, const TSet& t, const VecPlus& x) {
  if (f.n() != t.n() || f.m() != t.m()) throw DimensionError("intersection_gap: dimension mismatch");
  BoxUnion value = f.eval(x);
  BoxUnion inter = t.eval(x);
  return {hausdorff(value, inter), subset(value, inter)};
}

}  // namespace icr
