#include "icr/linsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace icr {

LinSystem::LinSystem(std::size_t vars) : vars_(vars) {
  if (vars == 0) throw PreconditionError("linear system needs at least one variable");
}

LinSystem& LinSystem::add(std::vector<Rat> coeffs, Rel rel, Rat rhs) {
  if (coeffs.size() != vars_)
    throw DimensionError("constraint has " + std::to_string(coeffs.size()) + " coefficients, system has " +
                         std::to_string(vars_) + " variables");
  rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
  return *this;
}

LinSystem& LinSystem::add_ge(std::vector<Rat> coeffs, Rat rhs) {
  for (auto& c : coeffs) c = -c;
  return add(std::move(coeffs), Rel::Le, -rhs);
}

LinSystem& LinSystem::add_gt(std::vector<Rat> coeffs, Rat rhs) {
  for (auto& c : coeffs) c = -c;
  return add(std::move(coeffs), Rel::Lt, -rhs);
}

bool LinSystem::satisfied_by(const std::vector<Rat>& x) const {
  if (x.size() != vars_) return false;
  for (const auto& row : rows_) {
    Rat lhs(0);
    for (std::size_t j = 0; j < vars_; ++j) lhs += row.coeffs[j] * x[j];
    bool ok = row.rel == Rel::Le ? lhs <= row.rhs : row.rel == Rel::Lt ? lhs < row.rhs : lhs == row.rhs;
    if (!ok) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kRowCap = 200000;

// a . x <= b, or < b when strict.
struct Row {
  std::vector<Rat> a;
  bool strict = false;
  Rat b;
};

// Normalized, deduplicated row set. Returns false on a violated constant row.
class RowSet {
 public:
  bool insert(Row r) {
    std::size_t lead = 0;
    while (lead < r.a.size() && r.a[lead].is_zero()) ++lead;
    if (lead == r.a.size()) {
      return r.strict ? Rat(0) < r.b : Rat(0) <= r.b;
    }
    Rat scale = r.a[lead].sign() > 0 ? r.a[lead] : -r.a[lead];
    for (auto& c : r.a) c /= scale;
    r.b /= scale;
    auto it = index_.find(r.a);
    if (it == index_.end()) {
      index_.emplace(r.a, rows_.size());
      rows_.push_back(std::move(r));
      if (rows_.size() > kRowCap) throw std::runtime_error("Fourier-Motzkin row budget exceeded");
    } else {
      Row& old = rows_[it->second];
      if (r.b < old.b || (r.b == old.b && r.strict)) {
        old.b = r.b;
        old.strict = r.strict;
      }
    }
    return true;
  }
  std::vector<Row>& rows() { return rows_; }

 private:
  std::vector<Row> rows_;
  std::map<std::vector<Rat>, std::size_t> index_;
};

struct Elimination {
  bool feasible = true;
  std::vector<std::size_t> order;            // eliminated variables, in order
  std::vector<std::vector<Row>> stages;      // rows present before each elimination
  std::vector<Row> final_rows;               // rows after the last elimination
};

std::vector<Row> to_rows(const LinSystem& s, bool allow_strict) {
  std::vector<Row> out;
  for (const auto& c : s.constraints()) {
    if (c.rel == Rel::Lt && !allow_strict) throw PreconditionError("strict constraint in minimization");
    if (c.rel == Rel::Eq) {
      out.push_back({c.coeffs, false, c.rhs});
      std::vector<Rat> neg = c.coeffs;
      for (auto& v : neg) v = -v;
      out.push_back({std::move(neg), false, -c.rhs});
    } else {
      out.push_back({c.coeffs, c.rel == Rel::Lt, c.rhs});
    }
  }
  return out;
}

// Eliminates every variable in `targets`, choosing at each step the one
// producing the fewest combined rows.
Elimination eliminate(std::vector<Row> rows, std::size_t vars, std::vector<std::size_t> targets) {
  Elimination e;
  RowSet start;
  for (auto& r : rows)
    if (!start.insert(std::move(r))) {
      e.feasible = false;
      return e;
    }
  std::vector<Row> current = std::move(start.rows());
  while (!targets.empty()) {
    std::size_t best_pos = 0;
    std::optional<long> best_cost;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      long pos = 0, neg = 0;
      for (const auto& r : current) {
        int sg = r.a[targets[t]].sign();
        pos += sg > 0;
        neg += sg < 0;
      }
      long cost = pos * neg - pos - neg;
      if (!best_cost || cost < *best_cost) {
        best_cost = cost;
        best_pos = t;
      }
    }
    std::size_t v = targets[best_pos];
    targets.erase(targets.begin() + static_cast<long>(best_pos));
    e.order.push_back(v);
    e.stages.push_back(current);

    RowSet next;
    std::vector<const Row*> pos, neg;
    for (const auto& r : current) {
      int sg = r.a[v].sign();
      if (sg > 0) pos.push_back(&r);
      else if (sg < 0) neg.push_back(&r);
      else if (!next.insert(r)) {
        e.feasible = false;
        return e;
      }
    }
    for (const Row* p : pos)
      for (const Row* q : neg) {
        // p.a[v] = 1 and q.a[v] = -1 after normalization when v leads; scale generally.
        Rat wp = -q->a[v];
        Rat wq = p->a[v];
        Row c;
        c.a.resize(vars);
        for (std::size_t j = 0; j < vars; ++j) c.a[j] = wp * p->a[j] + wq * q->a[j];
        c.a[v] = Rat(0);
        c.b = wp * p->b + wq * q->b;
        c.strict = p->strict || q->strict;
        if (!next.insert(std::move(c))) {
          e.feasible = false;
          return e;
        }
      }
    current = std::move(next.rows());
  }
  e.final_rows = std::move(current);
  return e;
}

struct Bound {
  std::optional<Rat> value;
  bool strict = false;
};

Rat pick_value(const std::vector<Row>& rows, std::size_t v, const std::vector<std::optional<Rat>>& assigned) {
  Bound lo, hi;
  for (const auto& r : rows) {
    int sg = r.a[v].sign();
    if (sg == 0) continue;
    Rat rest = r.b;
    for (std::size_t j = 0; j < r.a.size(); ++j) {
      if (j == v || r.a[j].is_zero()) continue;
      rest -= r.a[j] * assigned[j].value_or(Rat(0));
    }
    Rat bound = rest / r.a[v];
    Bound& side = sg > 0 ? hi : lo;
    bool tighter = !side.value || (sg > 0 ? bound < *side.value : bound > *side.value);
    if (tighter) {
      side.value = bound;
      side.strict = r.strict;
    } else if (bound == *side.value) {
      side.strict = side.strict || r.strict;
    }
  }
  if (lo.value && hi.value) {
    if (*lo.value < *hi.value) return (*lo.value + *hi.value) / Rat(2);
    return *lo.value;
  }
  if (lo.value) return lo.strict ? *lo.value + Rat(1) : *lo.value;
  if (hi.value) return hi.strict ? *hi.value - Rat(1) : *hi.value;
  return Rat(0);
}

}  // namespace

Feasibility fm_feasible(const LinSystem& s) {
  if (s.variables() > LinSystem::kMaxVariables)
    throw PreconditionError("variable budget exceeded: " + std::to_string(s.variables()) + " > " +
                            std::to_string(LinSystem::kMaxVariables));
  std::vector<std::size_t> all(s.variables());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  Elimination e = eliminate(to_rows(s, true), s.variables(), all);
  if (!e.feasible) return {};
  // All rows left are constant and were checked on insertion.
  std::vector<std::optional<Rat>> assigned(s.variables());
  for (std::size_t k = e.order.size(); k-- > 0;) {
    std::size_t v = e.order[k];
    assigned[v] = pick_value(e.stages[k], v, assigned);
  }
  std::vector<Rat> x;
  for (auto& a : assigned) x.push_back(a.value_or(Rat(0)));
  if (!s.satisfied_by(x)) throw std::logic_error("Fourier-Motzkin witness failed verification");
  return {true, std::move(x)};
}

Rat fm_minimize(const LinSystem& s, std::size_t objective) {
  if (s.variables() > LinSystem::kMaxVariables)
    throw PreconditionError("variable budget exceeded");
  if (objective >= s.variables()) throw PreconditionError("objective index out of range");
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < s.variables(); ++j)
    if (j != objective) others.push_back(j);
  Elimination e = eliminate(to_rows(s, false), s.variables(), others);
  if (!e.feasible) throw PreconditionError("infeasible system");
  std::optional<Rat> lo, hi;
  for (const auto& r : e.final_rows) {
    const Rat& a = r.a[objective];
    Rat bound = r.b / a;
    if (a.sign() > 0) hi = hi ? min(*hi, bound) : bound;
    else lo = lo ? max(*lo, bound) : bound;
  }
  if (!lo) throw PreconditionError("objective unbounded below");
  if (hi && *hi < *lo) throw PreconditionError("infeasible system");
  return *lo;
}

}  // namespace icr
