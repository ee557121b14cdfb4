#include "icr/normal_set.hpp"

#include <algorithm>

namespace icr {

namespace {

void require_dim(const BoxUnion& c, const VecPlus& x, const char* what) {
  if (c.dim() != x.dim())
    throw DimensionError(std::string(what) + ": set has dimension " + std::to_string(c.dim()) +
                         ", point has " + std::to_string(x.dim()));
}

void require_dim(const BoxUnion& a, const BoxUnion& b, const char* what) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
}

}  // namespace

BoxUnion BoxUnion::canonicalize(std::size_t dim, std::vector<VecPlus> raw) {
  BoxUnion out(dim);
  for (const auto& g : raw)
    if (g.dim() != dim) throw DimensionError("generator " + g.str() + " has wrong dimension");
  std::sort(raw.begin(), raw.end(), [](const VecPlus& a, const VecPlus& b) { return lex_less(a, b); });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // A generator can only be dominated by a lexicographically larger one.
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < raw.size() && !dominated; ++j) dominated = leq(raw[i], raw[j]);
    if (!dominated) out.gens_.push_back(raw[i]);
  }
  return out;
}

BoxUnion BoxUnion::box(VecPlus g) {
  BoxUnion out(g.dim());
  out.gens_.push_back(std::move(g));
  return out;
}

Rat BoxUnion::diameter() const {
  Rat d(0);
  for (const auto& g : gens_) d = max(d, g.max_entry());
  return d;
}

std::string BoxUnion::str() const {
  if (gens_.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += gens_[i].str();
  }
  return s + "}";
}

bool member(const BoxUnion& c, const VecPlus& x) {
  require_dim(c, x, "member");
  return std::any_of(c.generators().begin(), c.generators().end(),
                     [&](const VecPlus& g) { return leq(x, g); });
}

bool subset(const BoxUnion& a, const BoxUnion& b) {
  require_dim(a, b, "subset");
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const VecPlus& g) { return member(b, g); });
}

BoxUnion set_union(const BoxUnion& a, const BoxUnion& b) {
  require_dim(a, b, "union");
  std::vector<VecPlus> raw = a.generators();
  raw.insert(raw.end(), b.generators().begin(), b.generators().end());
  return BoxUnion::canonicalize(a.dim(), std::move(raw));
}

BoxUnion intersect(const BoxUnion& a, const BoxUnion& b) {
  require_dim(a, b, "intersect");
  std::vector<VecPlus> raw;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) raw.push_back(g.meet(h));
  return BoxUnion::canonicalize(a.dim(), std::move(raw));
}

BoxUnion minkowski_sum(const BoxUnion& a, const BoxUnion& b) {
  require_dim(a, b, "minkowski_sum");
  if (a.empty() || b.empty()) throw PreconditionError("minkowski_sum: empty operand");
  std::vector<VecPlus> raw;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) raw.push_back(g + h);
  return BoxUnion::canonicalize(a.dim(), std::move(raw));
}

BoxUnion scale(const Rat& t, const BoxUnion& a) {
  if (t.sign() <= 0) throw PreconditionError("scale: factor must be positive, got " + t.str());
  std::vector<VecPlus> raw;
  for (const auto& g : a.generators()) raw.push_back(g.scaled(t));
  return BoxUnion::canonicalize(a.dim(), std::move(raw));
}

Rat support(const BoxUnion& c, const VecPlus& l) {
  require_dim(c, l, "support");
  Rat s(0);
  for (const auto& g : c.generators()) s = max(s, coupling(l, g));
  return s;
}

ExtRat dist_inf(const VecPlus& x, const BoxUnion& c) {
  require_dim(c, x, "dist_inf");
  ExtRat best = ExtRat::infinity();
  for (const auto& g : c.generators()) {
    Rat d(0);
    for (std::size_t i = 0; i < x.dim(); ++i) d = max(d, pos_part(x[i] - g[i]));
    best = min(best, ExtRat(d));
  }
  return best;
}

ExtRat excess(const BoxUnion& a, const BoxUnion& b) {
  require_dim(a, b, "excess");
  ExtRat e(0);
  for (const auto& g : a.generators()) e = max(e, dist_inf(g, b));
  return e;
}

ExtRat hausdorff(const BoxUnion& a, const BoxUnion& b) {
  require_dim(a, b, "hausdorff");
  if (a.empty() && b.empty()) return Rat(0);
  if (a.empty() || b.empty()) return ExtRat::infinity();
  return max(excess(a, b), excess(b, a));
}

Rat radial_extent(const BoxUnion& c, const VecPlus& x) {
  require_dim(c, x, "radial_extent");
  auto supp = support_index(x);
  if (supp.empty()) throw PreconditionError("apex zero");
  Rat best(0);
  for (const auto& g : c.generators()) {
    Rat t = g[supp[0]] / x[supp[0]];
    for (std::size_t i : supp) t = min(t, g[i] / x[i]);
    best = max(best, t);
  }
  return best;
}

VecPlus separate(const BoxUnion& c, const VecPlus& x) {
  require_dim(c, x, "separate");
  if (x.is_zero()) throw PreconditionError("apex zero");
  if (member(c, x)) throw PreconditionError("x in C");
  // t_bar < 1 since x is outside; any beta in (t_bar, 1) works.
  Rat beta = (Rat(1) + radial_extent(c, x)) / Rat(2);
  std::vector<Rat> l(x.dim(), Rat(0));
  for (std::size_t i : support_index(x)) l[i] = Rat(1) / (beta * x[i]);
  return VecPlus(std::move(l));
}

BoxUnion enlarge(const BoxUnion& c, const Rat& eps) {
  if (eps.sign() < 0) throw PreconditionError("enlarge: eps must be nonnegative, got " + eps.str());
  std::vector<VecPlus> raw;
  auto bump = VecPlus::filled(c.dim(), eps);
  for (const auto& g : c.generators()) raw.push_back(g + bump);
  return BoxUnion::canonicalize(c.dim(), std::move(raw));
}

}  // namespace icr
