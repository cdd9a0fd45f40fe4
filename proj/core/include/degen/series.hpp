#pragma once

// Formal power series in t truncated at a fixed order, with coefficients in
// XPoly (jointly polynomial in lambda and x).

#include <cstddef>
#include <vector>

#include "degen/polynomial.hpp"

namespace degen {

/// Generalized falling factorial of a polynomial argument:
/// arg (arg - lambda) (arg - 2 lambda) ... (arg - (n-1) lambda); 1 for n = 0.
XPoly generalized_falling_factorial(const XPoly& arg, unsigned n);

class TruncatedSeries {
 public:
  /// The zero series with order + 1 coefficient slots.
  explicit TruncatedSeries(std::size_t order);
  /// Missing trailing slots are zero; extra slots beyond order are rejected.
  TruncatedSeries(std::size_t order, std::vector<XPoly> coeffs);

  static TruncatedSeries constant(std::size_t order, XPoly c);
  /// t itself (or zero at order 0).
  static TruncatedSeries t(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const XPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<XPoly>& coefficients() const { return coeffs_; }

  TruncatedSeries operator-() const;
  TruncatedSeries scaled(const XPoly& c) const;

  // Mixed-order operands throw std::invalid_argument.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  std::vector<XPoly> coeffs_;
};

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries pow(const TruncatedSeries& base, unsigned exponent);

/// exp(u) = sum_m u^m / m!. Requires a zero constant term (std::domain_error).
TruncatedSeries series_exp(const TruncatedSeries& u);

/// e_lambda^{arg}(t) = sum_k (arg)_{k,lambda} t^k / k!.
TruncatedSeries degenerate_exp_series(const XPoly& arg, std::size_t order);

}  // namespace degen
