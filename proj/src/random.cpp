#include "icr/random.hpp"

#include <stdexcept>

namespace icr {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  return eng_() % n;
}

long Rng::between(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rat Rng::grid(long den, long lo_num, long hi_num) { return Rat(between(lo_num, hi_num), den); }

Rng Rng::fork(std::uint64_t label) {
  std::uint64_t s = eng_() ^ (label * 0x9e3779b97f4a7c15ULL);
  return Rng(s);
}

VecPlus random_vec(Rng& r, std::size_t dim, const GridSpec& g) {
  std::vector<Rat> v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(r.grid(g.den, g.lo, g.hi));
  return VecPlus(std::move(v));
}

BoxUnion random_box_union(Rng& r, std::size_t dim, std::size_t max_gens, const GridSpec& g) {
  std::size_t count = 1 + r.below(max_gens);
  std::vector<VecPlus> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_vec(r, dim, g));
  return BoxUnion::canonicalize(dim, std::move(gens));
}

StepMapping random_step(Rng& r, std::size_t n, std::size_t m, std::size_t pieces, std::size_t max_gens,
                        const GridSpec& thresholds, const GridSpec& values) {
  std::vector<StepPiece> out;
  for (std::size_t j = 0; j < pieces; ++j)
    out.push_back({random_vec(r, n, thresholds), random_box_union(r, m, max_gens, values)});
  return StepMapping(n, m, std::move(out));
}

StepMapping random_box_step(Rng& r, std::size_t n, std::size_t m, std::size_t pieces) {
  VecPlus dir = random_vec(r, m, {4, 2, 6});
  std::vector<StepPiece> out;
  for (std::size_t j = 0; j < pieces; ++j)
    out.push_back({random_vec(r, n, {4, 1, 12}), BoxUnion::box(dir.scaled(r.grid(2, 1, 6)))});
  return StepMapping(n, m, std::move(out));
}

DeltaMapping random_delta(Rng& r, std::size_t n, std::size_t m) {
  VecPlus l = random_vec(r, m, {4, 0, 8});
  while (l.is_zero()) l = random_vec(r, m, {4, 0, 8});
  return DeltaMapping(std::move(l), random_vec(r, n, {4, 0, 8}), r.grid(4, 0, 8));
}

}  // namespace icr
