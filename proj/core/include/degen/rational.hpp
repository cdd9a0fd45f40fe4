#pragma once

// Exact arbitrary-precision rational scalar.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degen {

/// Reduced fraction p/q with q > 0; zero is 0/1. Backed by GMP's mpq.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p/q", signed integers, and decimals such as "0.5" or "1e-12".
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  /// Canonical "p/q" form; integers always carry "/1".
  std::string str() const;
  /// Human-readable form: "p/q", or just "p" for integers.
  std::string pretty() const;
  /// Decimal rendering with the given number of significant digits.
  std::string decimal(int digits = 20) const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& backend() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);
/// Classical falling factorial m(m-1)...(m-k+1) of an integer argument.
Rational falling_factorial(long m, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace degen
