#include "thompson/rational.hpp"

#include <cctype>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) : v_(n, d) {
  if (d == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  return hash_mpz(v_.get_num()) * 31 + hash_mpz(v_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, long n) {
  if (n < 0) return pow(Rational(1) / q, -n);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(n));
  return Rational(num, den);
}

bool is_dyadic(const Rational& q) {
  const mpz_class d = q.denominator();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

std::optional<long> pow2_exponent(const Rational& q) {
  if (q.sign() <= 0) throw DomainError("pow2_exponent of non-positive value " + q.to_string());
  const mpz_class n = q.numerator();
  const mpz_class d = q.denominator();
  // In lowest terms at most one of n, d is even; the other must be 1.
  if (n == 1) {
    if (mpz_popcount(d.get_mpz_t()) != 1) return std::nullopt;
    return -static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
  }
  if (d == 1 && mpz_popcount(n.get_mpz_t()) == 1) {
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
  }
  return std::nullopt;
}

std::optional<long> integer_log(const Rational& value, const Rational& base) {
  if (value.sign() <= 0 || base.sign() <= 0 || base == Rational(1)) {
    throw DomainError("integer_log needs positive value and positive base != 1");
  }
  Rational b = base < Rational(1) ? Rational(1) / base : base;
  const long dir = base < Rational(1) ? -1 : 1;
  Rational v = value;
  long k = 0;
  if (v >= Rational(1)) {
    while (v > Rational(1)) {
      v /= b;
      ++k;
    }
  } else {
    while (v < Rational(1)) {
      v *= b;
      --k;
    }
  }
  if (v != Rational(1)) return std::nullopt;
  return dir * k;
}

std::optional<Rational> rational_root(const Rational& q, long n) {
  if (q.sign() <= 0 || n < 1) throw DomainError("rational_root needs q > 0 and n >= 1");
  mpz_class rn, rd;
  const bool exact_n = mpz_root(rn.get_mpz_t(), q.raw().get_num_mpz_t(), static_cast<unsigned long>(n)) != 0;
  const bool exact_d = mpz_root(rd.get_mpz_t(), q.raw().get_den_mpz_t(), static_cast<unsigned long>(n)) != 0;
  if (!exact_n || !exact_d) return std::nullopt;
  return Rational(rn, rd);
}

Pow2Exp Pow2Exp::of(const Rational& value) {
  auto k = pow2_exponent(value);
  if (!k) throw DomainError(value.to_string() + " is not an integer power of 2");
  return Pow2Exp(Rational(*k));
}

std::optional<Rational> Pow2Exp::value() const {
  if (!exponent_.is_integer()) return std::nullopt;
  return thompson::pow(Rational(2), exponent_.numerator().get_si());
}

}  // namespace thompson
