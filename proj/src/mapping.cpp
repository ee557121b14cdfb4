#include "icr/mapping.hpp"

#include "icr/linsys.hpp"

#include <algorithm>
#include <map>

namespace icr {

namespace {

void require_point(std::size_t expected, const VecPlus& x, const char* what) {
  if (x.dim() != expected)
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) + ", got " +
                         std::to_string(x.dim()));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

// ---------------------------------------------------------------------------

StepMapping::StepMapping(std::size_t n, std::size_t m, std::vector<StepPiece> pieces) : n_(n), m_(m) {
  if (n == 0 || m == 0) throw DimensionError("mapping dimensions must be positive");
  pieces.push_back({VecPlus::zeros(n), BoxUnion::origin(m)});
  auto cmp = [](const VecPlus& a, const VecPlus& b) { return lex_less(a, b); };
  std::map<VecPlus, BoxUnion, decltype(cmp)> merged(cmp);
  for (auto& p : pieces) {
    require_point(n, p.threshold, "step piece threshold");
    if (p.value.dim() != m) throw DimensionError("step piece value has wrong dimension");
    auto it = merged.find(p.threshold);
    if (it == merged.end()) merged.emplace(p.threshold, p.value);
    else it->second = set_union(it->second, p.value);
  }
  for (auto& [t, v] : merged) pieces_.push_back({t, v});
}

BoxUnion StepMapping::eval(const VecPlus& x) const {
  require_point(n_, x, "step_eval");
  std::vector<VecPlus> raw;
  for (const auto& p : pieces_)
    if (leq(p.threshold, x)) raw.insert(raw.end(), p.value.generators().begin(), p.value.generators().end());
  return BoxUnion::canonicalize(m_, std::move(raw));
}

bool operator==(const StepMapping& a, const StepMapping& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_ || a.pieces_.size() != b.pieces_.size()) return false;
  for (std::size_t i = 0; i < a.pieces_.size(); ++i)
    if (!(a.pieces_[i].threshold == b.pieces_[i].threshold) || !(a.pieces_[i].value == b.pieces_[i].value))
      return false;
  return true;
}

BoxUnion HullMapping::eval(const VecPlus& x) const {
  require_point(n(), x, "hull_eval");
  std::vector<VecPlus> raw;
  for (const auto& p : base_.pieces()) {
    Rat lambda(1);
    bool admissible = true;
    for (std::size_t i : support_index(p.threshold)) {
      if (x[i].is_zero()) {
        admissible = false;
        break;
      }
      lambda = max(lambda, p.threshold[i] / x[i]);
    }
    if (!admissible) continue;
    Rat inv = Rat(1) / lambda;
    for (const auto& g : p.value.generators()) raw.push_back(g.scaled(inv));
  }
  return BoxUnion::canonicalize(m(), std::move(raw));
}

DeltaMapping::DeltaMapping(VecPlus l, VecPlus k, Rat c) : l_(std::move(l)), k_(std::move(k)), c_(std::move(c)) {
  if (l_.is_zero()) throw PreconditionError("Delta mapping requires l != 0");
  if (c_.sign() < 0) throw PreconditionError("Delta mapping requires c >= 0");
}

BoxUnion DeltaMapping::eval(const VecPlus& x) const {
  require_point(n(), x, "delta_eval");
  Rat h = h_plus(k_, c_, x);
  std::vector<VecPlus> raw;
  for (std::size_t i : support_index(l_)) {
    std::vector<Rat> g(m(), h);
    g[i] = min(h, h / l_[i]);
    raw.emplace_back(std::move(g));
  }
  return BoxUnion::canonicalize(m(), std::move(raw));
}

std::pair<VecPlus, Rat> scalar_delta_bridge(const DeltaMapping& d) {
  if (d.m() != 1) throw PreconditionError("scalar bridge requires m = 1");
  Rat inv = Rat(1) / max(d.l()[0], Rat(1));
  return {d.k().scaled(inv), d.c() * inv};
}

// ---------------------------------------------------------------------------

ExtRat eval_scalar(const ScalarFn& f, const VecPlus& x) {
  return std::visit(overloaded{
                        [&](const MinOfH& m) -> ExtRat {
                          if (m.terms.empty()) throw PreconditionError("empty min of elementary terms");
                          ExtRat best = ExtRat::infinity();
                          for (const auto& t : m.terms)
                            best = min(best, t.checked ? h_check(t.k, t.c, x) : ExtRat(h_plus(t.k, t.c, x)));
                          return best;
                        },
                        [&](const ScalarStep& s) -> ExtRat {
                          Rat v(0);
                          for (const auto& [t, val] : s.pieces)
                            if (leq(t, x)) v = max(v, val);
                          return v;
                        }},
                    f);
}

std::size_t scalar_arity(const ScalarFn& f) {
  return std::visit(overloaded{[](const MinOfH& m) -> std::size_t {
                                 if (m.terms.empty()) throw PreconditionError("empty min of elementary terms");
                                 return m.terms.front().k.dim();
                               },
                               [](const ScalarStep& s) -> std::size_t {
                                 if (s.pieces.empty()) throw PreconditionError("empty scalar step");
                                 return s.pieces.front().first.dim();
                               }},
                    f);
}

Rat scalar_step_hull(const ScalarStep& f, const VecPlus& x) {
  Rat best(0);
  for (const auto& [t, val] : f.pieces) {
    require_point(t.dim(), x, "scalar_step_hull");
    Rat lambda(1);
    bool admissible = true;
    for (std::size_t i : support_index(t)) {
      if (x[i].is_zero()) {
        admissible = false;
        break;
      }
      lambda = max(lambda, t[i] / x[i]);
    }
    if (admissible) best = max(best, val / lambda);
  }
  return best;
}

// ---------------------------------------------------------------------------

Mapping::Mapping(StepMapping s) : node_(std::make_shared<Node>(s)), n_(s.n()), m_(s.m()) {}
Mapping::Mapping(HullMapping h) : node_(std::make_shared<Node>(h)), n_(h.n()), m_(h.m()) {}
Mapping::Mapping(DeltaMapping d) : node_(std::make_shared<Node>(d)), n_(d.n()), m_(d.m()) {}

Mapping Mapping::embed(ScalarFn f) {
  std::size_t n = scalar_arity(f);
  return Mapping(std::make_shared<Node>(Embed{std::move(f)}), n, 1);
}

namespace {
std::pair<std::size_t, std::size_t> common_dims(const std::vector<Mapping>& parts, const char* what) {
  if (parts.empty()) throw PreconditionError(std::string(what) + " of no mappings");
  for (const auto& p : parts)
    if (p.n() != parts[0].n() || p.m() != parts[0].m())
      throw DimensionError(std::string(what) + ": operands disagree on dimensions");
  return {parts[0].n(), parts[0].m()};
}
}  // namespace

Mapping Mapping::intersection(std::vector<Mapping> parts) {
  auto [n, m] = common_dims(parts, "intersection");
  return Mapping(std::make_shared<Node>(Intersection{std::move(parts)}), n, m);
}

Mapping Mapping::set_union(std::vector<Mapping> parts) {
  auto [n, m] = common_dims(parts, "union");
  return Mapping(std::make_shared<Node>(Union{std::move(parts)}), n, m);
}

Mapping Mapping::scaled(Rat t, Mapping inner) {
  if (t.sign() <= 0) throw PreconditionError("scale factor must be positive");
  auto n = inner.n(), m = inner.m();
  return Mapping(std::make_shared<Node>(Scaled{std::move(t), {std::move(inner)}}), n, m);
}

Mapping Mapping::enlarged(Rat eps, Mapping inner) {
  if (eps.sign() < 0) throw PreconditionError("enlargement must be nonnegative");
  auto n = inner.n(), m = inner.m();
  return Mapping(std::make_shared<Node>(Enlarged{std::move(eps), {std::move(inner)}}), n, m);
}

Mapping Mapping::closure(Mapping inner) {
  auto n = inner.n(), m = inner.m();
  return Mapping(std::make_shared<Node>(Closure{{std::move(inner)}}), n, m);
}

std::string Mapping::kind() const {
  return std::visit(overloaded{[](const StepMapping&) { return std::string("step"); },
                               [](const HullMapping&) { return std::string("hull"); },
                               [](const DeltaMapping&) { return std::string("delta"); },
                               [](const Embed&) { return std::string("embed"); },
                               [](const Intersection&) { return std::string("intersect"); },
                               [](const Union&) { return std::string("union"); },
                               [](const Scaled&) { return std::string("scale"); },
                               [](const Enlarged&) { return std::string("enlarge"); },
                               [](const Closure&) { return std::string("closure"); }},
                    *node_);
}

BoxUnion Mapping::eval(const VecPlus& x) const {
  require_point(n_, x, "eval");
  return std::visit(overloaded{[&](const StepMapping& s) { return s.eval(x); },
                               [&](const HullMapping& h) { return h.eval(x); },
                               [&](const DeltaMapping& d) { return d.eval(x); },
                               [&](const Embed& e) {
                                 ExtRat v = eval_scalar(e.f, x);
                                 if (v.is_inf())
                                   throw PreconditionError("embedded function is +inf at " + x.str());
                                 return BoxUnion::box(VecPlus{v.value()});
                               },
                               [&](const Intersection& in) {
                                 BoxUnion acc = in.parts[0].eval(x);
                                 for (std::size_t i = 1; i < in.parts.size(); ++i)
                                   acc = icr::intersect(acc, in.parts[i].eval(x));
                                 return acc;
                               },
                               [&](const Union& un) {
                                 BoxUnion acc = un.parts[0].eval(x);
                                 for (std::size_t i = 1; i < un.parts.size(); ++i)
                                   acc = icr::set_union(acc, un.parts[i].eval(x));
                                 return acc;
                               },
                               [&](const Scaled& s) { return icr::scale(s.t, s.inner[0].eval(x)); },
                               [&](const Enlarged& e) { return icr::enlarge(e.inner[0].eval(x), e.eps); },
                               // Values are finite unions of closed boxes, hence closed.
                               [&](const Closure& c) { return c.inner[0].eval(x); }},
                    *node_);
}

// ---------------------------------------------------------------------------

BoxUnion hull_oracle(const Mapping& f, const VecPlus& x, const std::vector<Rat>& lambda_grid) {
  std::vector<VecPlus> raw;
  for (const auto& lambda : lambda_grid) {
    if (lambda < Rat(1)) throw PreconditionError("hull_oracle grid values must be >= 1");
    Rat inv = Rat(1) / lambda;
    BoxUnion v = f.eval(x.scaled(lambda));
    for (const auto& g : v.generators()) raw.push_back(g.scaled(inv));
  }
  return BoxUnion::canonicalize(f.m(), std::move(raw));
}

Rat psi(const Mapping& f, const VecPlus& l, const VecPlus& x) {
  if (l.is_zero()) throw PreconditionError("psi requires l != 0");
  return support(f.eval(x), l);
}

bool graph_member(const Mapping& f, const VecPlus& x, const VecPlus& y) {
  require_point(f.m(), y, "graph_member");
  return member(f.eval(x), y);
}

ExtRat dist_to_graph(const StepMapping& f, const VecPlus& x, const VecPlus& y) {
  require_point(f.n(), x, "dist_to_graph");
  require_point(f.m(), y, "dist_to_graph");
  ExtRat best = ExtRat::infinity();
  for (const auto& p : f.pieces()) {
    Rat reach(0);
    for (std::size_t i = 0; i < f.n(); ++i) reach = max(reach, pos_part(p.threshold[i] - x[i]));
    for (const auto& g : p.value.generators()) {
      Rat d = reach;
      for (std::size_t k = 0; k < f.m(); ++k) d = max(d, pos_part(y[k] - g[k]));
      best = min(best, ExtRat(d));
    }
  }
  if (best.is_inf()) throw PreconditionError("empty graph");
  return best;
}

namespace {

// Variables: u (n), v (m), t. Polyhedron {(u,v) >= 0 : v <= g, theta_i v_k <= g_k u_i}
// intersected with the Chebyshev ball of radius t around (x, y).
LinSystem hull_piece_system(const VecPlus& theta, const VecPlus& g, const VecPlus& x, const VecPlus& y) {
  const std::size_t n = x.dim(), m = y.dim(), vars = n + m + 1, t = n + m;
  LinSystem s(vars);
  auto row = [&] { return std::vector<Rat>(vars, Rat(0)); };
  for (std::size_t j = 0; j < n + m; ++j) {
    auto r = row();
    r[j] = Rat(-1);
    s.add(r, Rel::Le, Rat(0));
  }
  for (std::size_t k = 0; k < m; ++k) {
    auto r = row();
    r[n + k] = Rat(1);
    s.add(r, Rel::Le, g[k]);
  }
  for (std::size_t i : support_index(theta))
    for (std::size_t k = 0; k < m; ++k) {
      auto r = row();
      r[n + k] = theta[i];
      r[i] = -g[k];
      s.add(r, Rel::Le, Rat(0));
    }
  for (std::size_t j = 0; j < n + m; ++j) {
    const Rat& c = j < n ? x[j] : y[j - n];
    auto up = row();
    up[j] = Rat(1);
    up[t] = Rat(-1);
    s.add(up, Rel::Le, c);
    auto down = row();
    down[j] = Rat(-1);
    down[t] = Rat(-1);
    s.add(down, Rel::Le, -c);
  }
  return s;
}

}  // namespace

ExtRat dist_to_graph(const HullMapping& f, const VecPlus& x, const VecPlus& y, std::pair<VecPlus, VecPlus>* nearest) {
  require_point(f.n(), x, "dist_to_graph");
  require_point(f.m(), y, "dist_to_graph");
  std::optional<Rat> best;
  std::optional<LinSystem> best_system;
  for (const auto& p : f.base().pieces())
    for (const auto& g : p.value.generators()) {
      LinSystem s = hull_piece_system(p.threshold, g, x, y);
      Rat d = fm_minimize(s, f.n() + f.m());
      if (!best || d < *best) {
        best = d;
        best_system = std::move(s);
      }
    }
  if (!best) throw PreconditionError("empty graph");
  if (nearest) {
    const std::size_t vars = f.n() + f.m() + 1;
    std::vector<Rat> fix(vars, Rat(0));
    fix[vars - 1] = Rat(1);
    best_system->add(fix, Rel::Eq, *best);
    auto feas = fm_feasible(*best_system);
    if (!feas.feasible) throw std::logic_error("nearest graph point not recoverable");
    std::vector<Rat> w = *feas.witness;
    *nearest = {VecPlus(std::vector<Rat>(w.begin(), w.begin() + static_cast<long>(f.n()))),
                VecPlus(std::vector<Rat>(w.begin() + static_cast<long>(f.n()),
                                         w.begin() + static_cast<long>(f.n() + f.m())))};
  }
  return *best;
}

}  // namespace icr
