#pragma once

// Exact truncated-series checks of the generating-function identities. Each
// check builds its series from algebra primitives only and compares the
// t^n coefficients against the closed forms.

#include <cstddef>
#include <optional>
#include <string>

#include "degen/polynomial.hpp"

namespace degen {

struct SeriesMismatch {
  std::size_t n = 0;
  XPoly expected;  // closed form
  XPoly actual;    // series coefficient
};

struct IdentityReport {
  std::string identity;
  std::size_t order = 0;
  bool pass = true;
  std::optional<SeriesMismatch> first_mismatch;
};

inline constexpr std::size_t kDefaultSeriesOrder = 10;

/// (e_lambda(t) - 1)^k / k! against S_{2,lambda}(n, k) t^n / n!.
IdentityReport stirling_egf_check(unsigned k, std::size_t order = kDefaultSeriesOrder);

/// exp(x (e_lambda(t) - 1)) against the degenerate Bell polynomials.
IdentityReport bell_egf_check(std::size_t order = kDefaultSeriesOrder);

/// e_lambda^r(t) exp(x (e_lambda(t) - 1)) against the degenerate r-Bell polynomials.
IdentityReport r_bell_egf_check(unsigned r, std::size_t order = kDefaultSeriesOrder);

/// e_lambda^{(y)_r}(t) with each coefficient passed through the coherent-state
/// map (y)_k -> x^k, against phi^{(r,r)}_{n,lambda}(x).
IdentityReport rr_egf_check(unsigned r, std::size_t order = kDefaultSeriesOrder);

/// The linear map sending (y)_k to x^k, computed from the forward-difference
/// table of f at y = 0, 1, ..., deg f. This is the scalar content of
/// <z| f evaluated on normally ordered (a^dagger)^k a^k |z> with x = |z|^2.
XPoly coherent_expectation(const XPoly& f);

}  // namespace degen
