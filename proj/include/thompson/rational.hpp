#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace thompson {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const Integer& n, const Integer& d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" (optional sign, decimal digits only).
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Always "p/q", even for integers ("3/1").
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

/// q^n for any integer n (q must be nonzero when n < 0).
Rational pow(const Rational& q, long n);

/// True iff the reduced denominator is a power of two.
bool is_dyadic(const Rational& q);

/// k with q == 2^k, or nullopt. Throws DomainError for q <= 0.
std::optional<long> pow2_exponent(const Rational& q);

/// k with value == base^k, or nullopt. Requires value > 0, base > 0, base != 1.
std::optional<long> integer_log(const Rational& value, const Rational& base);

/// The positive rational r with r^n == q, if one exists (q > 0, n >= 1).
std::optional<Rational> rational_root(const Rational& q, long n);

/// A power of two with rational exponent, carried symbolically.
class Pow2Exp {
 public:
  Pow2Exp() = default;
  explicit Pow2Exp(Rational exponent) : exponent_(std::move(exponent)) {}

  /// Exponent of a positive rational that is an integer power of two.
  static Pow2Exp of(const Rational& value);

  const Rational& exponent() const { return exponent_; }

  /// The rational value; defined only when the exponent is an integer.
  std::optional<Rational> value() const;

  Pow2Exp operator*(const Pow2Exp& o) const { return Pow2Exp(exponent_ + o.exponent_); }
  Pow2Exp pow(long n) const { return Pow2Exp(exponent_ * Rational(n)); }
  Pow2Exp root(long n) const { return Pow2Exp(exponent_ / Rational(n)); }

  friend bool operator==(const Pow2Exp&, const Pow2Exp&) = default;

 private:
  Rational exponent_;
};

}  // namespace thompson

template <>
struct std::hash<thompson::Rational> {
  std::size_t operator()(const thompson::Rational& q) const { return q.hash(); }
};
