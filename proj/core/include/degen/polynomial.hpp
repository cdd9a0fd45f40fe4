#pragma once

// Dense univariate polynomials over an exact coefficient ring, and the two
// nestings used throughout the library: polynomials in the deformation
// parameter lambda, and polynomials in x whose coefficients are such
// lambda-polynomials.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

/// Coefficients are stored in ascending degree with trailing zeros stripped,
/// so the zero polynomial is the empty vector and equality is structural.
template <class C>
class Polynomial {
 public:
  using coefficient_type = C;

  Polynomial() = default;

  template <class T>
    requires std::convertible_to<T, C>
  Polynomial(const T& constant)  // NOLINT(google-explicit-constructor)
      : coeffs_{C(constant)} {
    normalize();
  }

  Polynomial(std::initializer_list<C> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  /// c * t^degree in whatever indeterminate this ring uses.
  static Polynomial monomial(C c, std::size_t degree) {
    std::vector<C> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial indeterminate() { return monomial(C(1), 1); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  C coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C{}; }
  std::span<const C> coefficients() const { return coeffs_; }
  const C& leading() const { return coeffs_.back(); }

  /// Horner evaluation of the outermost indeterminate.
  template <class V>
  C evaluate(const V& at) const {
    C acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial<R>(std::move(out));
  }

  Polynomial operator-() const {
    std::vector<C> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_coeff(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplies every coefficient by c without promoting c to a polynomial.
  Polynomial scaled(const C& c) const {
    std::vector<C> v(coeffs_);
    for (auto& x : v) x = x * c;
    return Polynomial(std::move(v));
  }

 private:
  static bool is_zero_coeff(const C& c) {
    if constexpr (requires { c.is_zero(); }) return c.is_zero();
    else return c == C{};
  }
  void normalize() {
    while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
Polynomial<C> pow(const Polynomial<C>& base, unsigned exponent) {
  Polynomial<C> result(C(1));
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

/// Synthetic division of p by (t - root). Returns {quotient, remainder}.
template <class C>
std::pair<Polynomial<C>, C> divide_by_linear(const Polynomial<C>& p, const C& root) {
  const auto coeffs = p.coefficients();
  if (coeffs.empty()) return {Polynomial<C>{}, C{}};
  std::vector<C> q(coeffs.size() - 1);
  C carry = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = coeffs[i] + carry * root;
  }
  return {Polynomial<C>(std::move(q)), carry};
}

/// Polynomial in the deformation parameter lambda with rational coefficients.
using LambdaPoly = Polynomial<Rational>;
/// Polynomial in x whose coefficients are lambda-polynomials.
using XPoly = Polynomial<LambdaPoly>;

/// lambda as an element of LambdaPoly.
inline LambdaPoly lambda() { return LambdaPoly::indeterminate(); }
/// x as an element of XPoly.
inline XPoly x_var() { return XPoly::indeterminate(); }

/// Substitutes a rational for lambda in every coefficient; x stays symbolic.
XPoly evaluate_lambda(const XPoly& p, const Rational& at);
/// Evaluates at x and lambda simultaneously.
Rational evaluate(const XPoly& p, const Rational& x, const Rational& lam);

/// Human-readable ascending-degree rendering, e.g. "12 - 1*l".
std::string pretty(const LambdaPoly& p, std::string_view var = "l");
/// Renders an XPoly as a sum of "(lambda-poly)*x^k" terms.
std::string pretty(const XPoly& p, std::string_view var = "x");

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);
std::ostream& operator<<(std::ostream& os, const XPoly& p);

}  // namespace degen
