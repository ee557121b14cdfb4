#include "icr/cone.hpp"

namespace icr {

ConeSpec::ConeSpec(VecPlus apex, Rat radius)
    : apex_(std::move(apex)), radius_(std::move(radius)), strict_(support_index(apex_)) {
  if (radius_.sign() <= 0) throw PreconditionError("cone radius must be positive, got " + radius_.str());
}

bool cone_member(const ConeSpec& k, const VecPlus& w) {
  require_same_dim(k.apex(), w, "cone_member");
  if (w.is_zero()) return true;
  const VecPlus& z = k.apex();
  const Rat& r = k.radius();
  // sum(w) = s sum(z) + r s forces s.
  Rat s = w.sum() / (r + z.sum());
  std::vector<Rat> lambda;
  for (std::size_t i = 0; i < w.dim(); ++i) lambda.push_back((w[i] - s * z[i]) / r);
  for (const auto& v : lambda)
    if (v.sign() < 0) return false;
  for (std::size_t i : k.strict_set())
    if (lambda[i].sign() <= 0) return false;
  // w != 0 and r > 0 already rule out lambda = 0.
  return true;
}

LinSystem cone_system(const ConeSpec& k, const VecPlus& w) {
  require_same_dim(k.apex(), w, "cone_system");
  const std::size_t p = w.dim();
  const VecPlus& z = k.apex();
  LinSystem s(p);
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<Rat> row(p, z[j]);
    row[j] += k.radius();
    s.add(row, Rel::Eq, w[j]);
  }
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Rat> row(p, Rat(0));
    row[i] = Rat(1);
    s.add_ge(row, Rat(0));
  }
  for (std::size_t i : k.strict_set()) {
    std::vector<Rat> row(p, Rat(0));
    row[i] = Rat(1);
    s.add_gt(row, Rat(0));
  }
  s.add_gt(std::vector<Rat>(p, Rat(1)), Rat(0));
  return s;
}

LinSystem bad_region_system(const ESpec& e, const VecPlus& u, const VecPlus& v) {
  require_same_dim(e.x, u, "bad_region");
  require_same_dim(e.y, v, "bad_region");
  const std::size_t n = e.n(), m = e.m(), p = n + m;
  const Rat& r = e.cone.radius();
  LinSystem s(p);
  // u_j <= x_j + s x_j + r lambda_j, with s = sum(lambda).
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rat> row(p, e.x[j]);
    row[j] += r;
    s.add_ge(row, u[j] - e.x[j]);
  }
  // v_k >= y_k + s y_k + r lambda_{n+k}.
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Rat> row(p, e.y[k]);
    row[n + k] += r;
    s.add(row, Rel::Le, v[k] - e.y[k]);
  }
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Rat> row(p, Rat(0));
    row[i] = Rat(1);
    s.add_ge(row, Rat(0));
  }
  for (std::size_t i : e.cone.strict_set()) {
    std::vector<Rat> row(p, Rat(0));
    row[i] = Rat(1);
    s.add_gt(row, Rat(0));
  }
  s.add_gt(std::vector<Rat>(p, Rat(1)), Rat(0));
  return s;
}

bool bad_region_member(const ESpec& e, const VecPlus& u, const VecPlus& v) {
  return fm_feasible(bad_region_system(e, u, v)).feasible;
}

namespace {

template <class F>
ESpec build_E_impl(const F& f, const VecPlus& x, const VecPlus& y, std::string provenance) {
  if (graph_member(Mapping(f), x, y)) throw PreconditionError("(x,y) on graph");
  ExtRat r = dist_to_graph(f, x, y);
  return ESpec{x, y, ConeSpec(x.concat(y), r.value()), std::move(provenance)};
}

}  // namespace

ESpec build_E(const StepMapping& f, const VecPlus& x, const VecPlus& y, std::string provenance) {
  return build_E_impl(f, x, y, std::move(provenance));
}

ESpec build_E(const HullMapping& f, const VecPlus& x, const VecPlus& y, std::string provenance) {
  return build_E_impl(f, x, y, std::move(provenance));
}

Rat hull_graph_distance_direct(const HullMapping& f, const VecPlus& x, const VecPlus& y) {
  std::optional<Rat> best;
  for (const auto& p : f.base().pieces())
    for (const auto& g : p.value.generators()) {
      Rat t(0);
      for (std::size_t k = 0; k < f.m(); ++k) {
        t = max(t, y[k] - g[k]);
        for (std::size_t i : support_index(p.threshold))
          t = max(t, (p.threshold[i] * y[k] - g[k] * x[i]) / (p.threshold[i] + g[k]));
      }
      if (!best || t < *best) best = t;
    }
  if (!best) throw PreconditionError("empty graph");
  return *best;
}

std::optional<std::vector<Rat>> apex_ray_witness(const ESpec& e, const VecPlus& x, const VecPlus& y) {
  const VecPlus z = e.x.concat(e.y);
  const VecPlus target = x.concat(y);
  if (z.is_zero()) return std::nullopt;
  // target = (1 + c) z for the scalar c; recover c from any positive coordinate.
  std::size_t i0 = support_index(z).front();
  Rat c = target[i0] / z[i0] - Rat(1);
  if (c.sign() <= 0 || !(z.scaled(Rat(1) + c) == target)) return std::nullopt;
  const Rat& r = e.cone.radius();
  Rat s = c * z.sum() / (r + z.sum());
  std::vector<Rat> lambda;
  for (std::size_t i = 0; i < z.dim(); ++i) lambda.push_back((c - s) / r * z[i]);
  // Verify the certificate from scratch: lambda admissible and z + sum lambda_i (z + r e_i) = target.
  Rat sum(0);
  for (const auto& l : lambda) {
    if (l.sign() < 0) return std::nullopt;
    sum += l;
  }
  if (sum.sign() <= 0) return std::nullopt;
  for (std::size_t i : e.cone.strict_set())
    if (lambda[i].sign() <= 0) return std::nullopt;
  for (std::size_t j = 0; j < z.dim(); ++j)
    if (z[j] + sum * z[j] + r * lambda[j] != target[j]) return std::nullopt;
  return lambda;
}

Theorem1Check theorem1_witness(const HullMapping& f, const VecPlus& x, const VecPlus& y,
                               const std::vector<std::pair<VecPlus, VecPlus>>& graph_samples,
                               const Theorem1Options& opt) {
  Theorem1Check out{.x = x, .y = y, .alpha = Rat(0), .radius = Rat(0), .error = std::nullopt};
  const Mapping fm(f);
  if (graph_member(fm, x, y)) throw PreconditionError("(x,y) on graph");
  if (x.is_zero() && y.is_zero()) throw PreconditionError("apex zero");

  std::optional<Rat> alpha;
  for (unsigned k = 1; k <= opt.max_halvings; ++k) {
    Rat a = Rat(1) - pow2_neg(k);
    if (!graph_member(fm, x.scaled(a), y.scaled(a))) {
      alpha = a;
      out.halvings = k;
      break;
    }
  }
  if (!alpha) {
    out.error = "no alpha found within " + std::to_string(opt.max_halvings) + " halvings";
    return out;
  }
  out.alpha = *alpha;
  VecPlus zx = x.scaled(*alpha), zy = y.scaled(*alpha);

  std::pair<VecPlus, VecPlus> nearest{zx, zy};
  Rat r = dist_to_graph(f, zx, zy, &nearest).value();
  Rat direct = hull_graph_distance_direct(f, zx, zy);
  ESpec e{zx, zy, ConeSpec(zx.concat(zy), r * opt.radius_multiplier), "hull"};
  out.radius = e.cone.radius();
  out.radius_certified = e.cone.radius() == direct && graph_member(fm, nearest.first, nearest.second) &&
                         max(dist_sup(zx, nearest.first), dist_sup(zy, nearest.second)) == e.cone.radius();

  out.apex_ray_excludes = apex_ray_witness(e, x, y).has_value();
  out.fm_excludes = bad_region_member(e, x, y);
  for (const auto& [u, v] : graph_samples) {
    ++out.graph_points;
    if (!E_member(e, u, v)) ++out.graph_violations;
  }
  return out;
}

}  // namespace icr
