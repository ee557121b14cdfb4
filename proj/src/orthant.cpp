#include "icr/orthant.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace icr {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational \"" + std::string(text) + "\""); };
  if (text.empty()) throw bad();
  auto digits_only = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!digits_only(num, true) || !digits_only(den, false)) throw bad();
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw bad();
  return Rat(mpq_class(n, d));
}

std::string Rat::str() const { return q_.get_str(10); }

std::string Rat::decimal(int digits) const {
  mpf_class f(q_, 256);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  if (mant.empty()) return "0";
  bool neg = mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else if (static_cast<std::size_t>(exp) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
  }
  return neg ? "-" + out : out;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
Rat pos_part(const Rat& a) { return a.sign() > 0 ? a : Rat(0); }

Rat pow2_neg(unsigned k) {
  mpz_class den = 1;
  den <<= k;
  return Rat(mpq_class(mpz_class(1), den));
}

const Rat& ExtRat::value() const {
  if (!v_) throw std::domain_error("value of +inf");
  return *v_;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.is_inf() || b.is_inf()) return ExtRat::infinity();
  return ExtRat(*a.v_ + *b.v_);
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() && b.is_inf();
  return *a.v_ == *b.v_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_inf() && b.is_inf()) return std::strong_ordering::equal;
  if (a.is_inf()) return std::strong_ordering::greater;
  if (b.is_inf()) return std::strong_ordering::less;
  return *a.v_ <=> *b.v_;
}

ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }
ExtRat min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------

VecPlus::VecPlus(std::vector<Rat> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw DimensionError("vector dimension must be positive");
  for (const auto& v : e_)
    if (v.sign() < 0) throw PreconditionError("negative entry " + v.str() + " in orthant vector");
}

VecPlus VecPlus::zeros(std::size_t dim) { return VecPlus(std::vector<Rat>(dim, Rat(0))); }
VecPlus VecPlus::filled(std::size_t dim, const Rat& v) { return VecPlus(std::vector<Rat>(dim, v)); }
VecPlus VecPlus::unit(std::size_t dim, std::size_t i) {
  std::vector<Rat> e(dim, Rat(0));
  e.at(i) = Rat(1);
  return VecPlus(std::move(e));
}

bool VecPlus::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& v) { return v.is_zero(); });
}
bool VecPlus::strictly_positive() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& v) { return v.sign() > 0; });
}
Rat VecPlus::max_entry() const { return *std::max_element(e_.begin(), e_.end()); }
Rat VecPlus::min_entry() const { return *std::min_element(e_.begin(), e_.end()); }
Rat VecPlus::sum() const {
  Rat s(0);
  for (const auto& v : e_) s += v;
  return s;
}

VecPlus VecPlus::scaled(const Rat& t) const {
  if (t.sign() < 0) throw PreconditionError("negative scale factor");
  std::vector<Rat> out;
  out.reserve(e_.size());
  for (const auto& v : e_) out.push_back(v * t);
  return VecPlus(std::move(out));
}

VecPlus VecPlus::operator+(const VecPlus& o) const {
  require_same_dim(*this, o, "vector sum");
  std::vector<Rat> out;
  out.reserve(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) out.push_back(e_[i] + o.e_[i]);
  return VecPlus(std::move(out));
}

VecPlus VecPlus::meet(const VecPlus& o) const {
  require_same_dim(*this, o, "meet");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < e_.size(); ++i) out.push_back(min(e_[i], o.e_[i]));
  return VecPlus(std::move(out));
}

VecPlus VecPlus::join(const VecPlus& o) const {
  require_same_dim(*this, o, "join");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < e_.size(); ++i) out.push_back(max(e_[i], o.e_[i]));
  return VecPlus(std::move(out));
}

VecPlus VecPlus::concat(const VecPlus& o) const {
  std::vector<Rat> out(e_);
  out.insert(out.end(), o.e_.begin(), o.e_.end());
  return VecPlus(std::move(out));
}

VecPlus VecPlus::slice(std::size_t from, std::size_t count) const {
  if (from + count > e_.size()) throw DimensionError("slice out of range");
  return VecPlus(std::vector<Rat>(e_.begin() + static_cast<long>(from),
                                  e_.begin() + static_cast<long>(from + count)));
}

std::string VecPlus::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += e_[i].str();
  }
  return s + ")";
}

bool lex_less(const VecPlus& a, const VecPlus& b) {
  return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

void require_same_dim(const VecPlus& a, const VecPlus& b, const char* what) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
}

bool leq(const VecPlus& x, const VecPlus& y) {
  require_same_dim(x, y, "leq");
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::vector<std::size_t> support_index(const VecPlus& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i].sign() > 0) out.push_back(i);
  return out;
}

Rat coupling(const VecPlus& l, const VecPlus& x) {
  require_same_dim(l, x, "coupling");
  std::optional<Rat> best;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (l[i].sign() <= 0) continue;
    Rat t = l[i] * x[i];
    if (!best || t < *best) best = std::move(t);
  }
  return best.value_or(Rat(0));
}

Rat dist_sup(const VecPlus& x, const VecPlus& y) {
  require_same_dim(x, y, "distance");
  Rat d(0);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Rat diff = x[i] - y[i];
    if (diff.sign() < 0) diff = -diff;
    d = max(d, diff);
  }
  return d;
}

Rat h_plus(const VecPlus& k, const Rat& c, const VecPlus& x) {
  require_same_dim(k, x, "h_plus");
  Rat h = c;
  for (std::size_t i = 0; i < k.dim(); ++i) h = max(h, k[i] * x[i]);
  return h;
}

ExtRat h_check(const VecPlus& k, const Rat& c, const VecPlus& x) {
  require_same_dim(k, x, "h_check");
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x[i].sign() > 0 && k[i].sign() == 0) return ExtRat::infinity();
  return h_plus(k, c, x);
}

}  // namespace icr
