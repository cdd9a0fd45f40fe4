#include "degen/series_lab.hpp"

#include <functional>
#include <vector>

#include "degen/bell.hpp"
#include "degen/numbers.hpp"
#include "degen/series.hpp"

namespace degen {

namespace {

IdentityReport compare(std::string identity, const TruncatedSeries& series,
                       const std::function<XPoly(std::size_t)>& closed_form) {
  IdentityReport report{std::move(identity), series.order(), true, std::nullopt};
  for (std::size_t n = 0; n <= series.order(); ++n) {
    const XPoly actual =
        series[n].scaled(LambdaPoly(factorial(static_cast<unsigned>(n))));
    XPoly expected = closed_form(n);
    if (actual != expected) {
      report.pass = false;
      report.first_mismatch = SeriesMismatch{n, std::move(expected), actual};
      break;
    }
  }
  return report;
}

// x (e_lambda(t) - 1)
TruncatedSeries bell_exponent(std::size_t order) {
  const TruncatedSeries e = degenerate_exp_series(XPoly(1L), order);
  return (e - TruncatedSeries::constant(order, XPoly(1L))).scaled(x_var());
}

}  // namespace

XPoly coherent_expectation(const XPoly& f) {
  if (f.is_zero()) return {};
  const auto degree = static_cast<std::size_t>(f.degree());
  std::vector<LambdaPoly> diffs;
  diffs.reserve(degree + 1);
  for (std::size_t y = 0; y <= degree; ++y) diffs.push_back(f.evaluate(Rational(static_cast<long>(y))));

  std::vector<LambdaPoly> coeffs(degree + 1);
  for (std::size_t k = 0; k <= degree; ++k) {
    coeffs[k] = diffs[0] * LambdaPoly(Rational(1) / factorial(static_cast<unsigned>(k)));
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return XPoly(std::move(coeffs));
}

IdentityReport stirling_egf_check(unsigned k, std::size_t order) {
  const TruncatedSeries e = degenerate_exp_series(XPoly(1L), order);
  const TruncatedSeries shifted = e - TruncatedSeries::constant(order, XPoly(1L));
  const TruncatedSeries lhs = pow(shifted, k).scaled(XPoly(Rational(1) / factorial(k)));
  return compare("stirling_egf", lhs, [k](std::size_t n) {
    return XPoly(stirling2_degenerate(static_cast<unsigned>(n), k));
  });
}

IdentityReport bell_egf_check(std::size_t order) {
  const TruncatedSeries lhs = series_exp(bell_exponent(order));
  return compare("bell_egf", lhs,
                 [](std::size_t n) { return r_bell_poly(static_cast<unsigned>(n), 0); });
}

IdentityReport r_bell_egf_check(unsigned r, std::size_t order) {
  const TruncatedSeries shift = degenerate_exp_series(XPoly(static_cast<long>(r)), order);
  const TruncatedSeries lhs = shift * series_exp(bell_exponent(order));
  return compare("r_bell_egf", lhs,
                 [r](std::size_t n) { return r_bell_poly(static_cast<unsigned>(n), r); });
}

IdentityReport rr_egf_check(unsigned r, std::size_t order) {
  // Build (y)_r from its roots; the series is in t with coefficients in y.
  XPoly falling_r(1L);
  for (unsigned i = 0; i < r; ++i) falling_r = falling_r * (x_var() - XPoly(static_cast<long>(i)));
  const TruncatedSeries raw = degenerate_exp_series(falling_r, order);

  std::vector<XPoly> mapped;
  mapped.reserve(order + 1);
  for (const XPoly& c : raw.coefficients()) mapped.push_back(coherent_expectation(c));
  const TruncatedSeries lhs(order, std::move(mapped));

  return compare("rr_egf", lhs,
                 [r](std::size_t n) { return bell_rs_poly(static_cast<unsigned>(n), r, r); });
}

}  // namespace degen
