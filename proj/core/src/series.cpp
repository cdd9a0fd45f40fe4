#include "degen/series.hpp"

#include <stdexcept>
#include <string>

namespace degen {

XPoly generalized_falling_factorial(const XPoly& arg, unsigned n) {
  XPoly result(1L);
  for (unsigned j = 0; j < n; ++j)
    result = result * (arg - XPoly(lambda() * LambdaPoly(static_cast<long>(j))));
  return result;
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<XPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1)
    throw std::invalid_argument("TruncatedSeries: " + std::to_string(coeffs_.size()) +
                                " coefficients exceed order " + std::to_string(order));
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, XPoly c) {
  TruncatedSeries s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

TruncatedSeries TruncatedSeries::t(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = XPoly(1L);
  return s;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("TruncatedSeries: order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries s(*this);
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

TruncatedSeries TruncatedSeries::scaled(const XPoly& c) const {
  TruncatedSeries s(*this);
  for (auto& x : s.coeffs_) x = x * c;
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries s(a);
  for (std::size_t n = 0; n < s.coeffs_.size(); ++n) s.coeffs_[n] += b.coeffs_[n];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  TruncatedSeries s(a);
  for (std::size_t n = 0; n < s.coeffs_.size(); ++n) s.coeffs_[n] -= b.coeffs_[n];
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const std::size_t order = a.order();
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries pow(const TruncatedSeries& base, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::constant(base.order(), XPoly(1L));
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

TruncatedSeries series_exp(const TruncatedSeries& u) {
  if (!u[0].is_zero()) throw std::domain_error("series_exp: nonzero constant term");
  const std::size_t order = u.order();
  TruncatedSeries result = TruncatedSeries::constant(order, XPoly(1L));
  TruncatedSeries power = result;
  // u^m vanishes below t^m, so m <= order covers every retained coefficient.
  for (std::size_t m = 1; m <= order; ++m) {
    power = power * u;
    result = result + power.scaled(XPoly(Rational(1) / factorial(static_cast<unsigned>(m))));
  }
  return result;
}

TruncatedSeries degenerate_exp_series(const XPoly& arg, std::size_t order) {
  std::vector<XPoly> coeffs;
  coeffs.reserve(order + 1);
  XPoly falling(1L);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0)
      falling = falling * (arg - XPoly(lambda() * LambdaPoly(static_cast<long>(k - 1))));
    coeffs.push_back(falling.scaled(LambdaPoly(Rational(1) / factorial(static_cast<unsigned>(k)))));
  }
  return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace degen
