#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icr {

/// Raised when operands of a vector or set operation disagree on dimension.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition is violated (negative scale,
/// point on the graph, zero dual, ...). The message names the violation.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact rational in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class q);

  /// Parses "p" or "p/q" (optional leading '-'); throws on zero denominator
  /// or any other character.
  static Rat parse(std::string_view text);

  std::string str() const;
  /// Display-only decimal rendering with `digits` significant digits.
  std::string decimal(int digits = 20) const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);
/// max(a, 0)
Rat pos_part(const Rat& a);
/// 2^-k
Rat pow2_neg(unsigned k);

/// Nonnegative rational or +inf. Totally ordered; +inf absorbs + and max.
class ExtRat {
 public:
  ExtRat(Rat v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtRat(long v) : v_(Rat(v)) {}       // NOLINT(google-explicit-constructor)
  static ExtRat infinity() { return ExtRat(); }

  bool is_inf() const { return !v_.has_value(); }
  /// Throws if infinite.
  const Rat& value() const;
  std::string str() const { return is_inf() ? "inf" : v_->str(); }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  ExtRat() = default;
  std::optional<Rat> v_;
};

ExtRat max(const ExtRat& a, const ExtRat& b);
ExtRat min(const ExtRat& a, const ExtRat& b);

/// Point of the nonnegative orthant with fixed dimension.
class VecPlus {
 public:
  explicit VecPlus(std::vector<Rat> entries);
  VecPlus(std::initializer_list<Rat> entries) : VecPlus(std::vector<Rat>(entries)) {}
  static VecPlus zeros(std::size_t dim);
  static VecPlus filled(std::size_t dim, const Rat& v);
  static VecPlus unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return e_.size(); }
  const Rat& operator[](std::size_t i) const { return e_[i]; }
  std::span<const Rat> entries() const { return e_; }

  bool is_zero() const;
  bool strictly_positive() const;
  Rat max_entry() const;
  Rat min_entry() const;
  Rat sum() const;

  VecPlus scaled(const Rat& t) const;
  VecPlus operator+(const VecPlus& o) const;
  /// Componentwise minimum (meet) and maximum (join).
  VecPlus meet(const VecPlus& o) const;
  VecPlus join(const VecPlus& o) const;
  /// Concatenation (x, y) in the product orthant.
  VecPlus concat(const VecPlus& o) const;
  VecPlus slice(std::size_t from, std::size_t count) const;

  std::string str() const;

  friend bool operator==(const VecPlus&, const VecPlus&) = default;
  /// Lexicographic; only for canonical ordering, not the orthant order.
  friend bool lex_less(const VecPlus& a, const VecPlus& b);

 private:
  std::vector<Rat> e_;
};

void require_same_dim(const VecPlus& a, const VecPlus& b, const char* what);

/// Componentwise order: y - x in the orthant.
bool leq(const VecPlus& x, const VecPlus& y);
/// {i : v_i > 0}, zero-based.
std::vector<std::size_t> support_index(const VecPlus& v);
/// min over i in the support of l of l_i x_i; 0 when l = 0.
Rat coupling(const VecPlus& l, const VecPlus& x);
/// Chebyshev norm of x - y.
Rat dist_sup(const VecPlus& x, const VecPlus& y);
/// max(max_i k_i x_i, c)
Rat h_plus(const VecPlus& k, const Rat& c, const VecPlus& x);
/// h_plus when supp(x) is contained in supp(k), +inf otherwise.
ExtRat h_check(const VecPlus& k, const Rat& c, const VecPlus& x);

}  // namespace icr
