#pragma once

// Closed forms for the degenerate Stirling-type families and conversion
// between the power basis and the falling / rising factorial bases.

#include <vector>

#include "degen/polynomial.hpp"

namespace degen {

enum class Basis { falling, rising };

/// p = sum_k coefficients[k] * (x)_k  (falling)  or  <x>_k  (rising).
struct BasisCoeffs {
  std::vector<LambdaPoly> coefficients;
  Basis basis = Basis::falling;

  LambdaPoly operator[](std::size_t k) const {
    return k < coefficients.size() ? coefficients[k] : LambdaPoly{};
  }
  friend bool operator==(const BasisCoeffs&, const BasisCoeffs&) = default;
};

/// Classical (x)_n = x(x-1)...(x-n+1).
XPoly falling_factorial_poly(unsigned n);
/// Classical <x>_n = x(x+1)...(x+n-1).
XPoly rising_factorial_poly(unsigned n);
/// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda).
XPoly gen_falling_factorial(unsigned n);

/// Iterated synthetic division by x, x-1, x-2, ... (falling) or x, x+1, ...
/// (rising). The result has length deg p + 1.
BasisCoeffs to_falling_basis(const XPoly& p);
BasisCoeffs to_rising_basis(const XPoly& p);
XPoly from_basis(const BasisCoeffs& b);

/// S_{2,lambda}(n, k) by the alternating sum over (p)_{n,lambda}; 0 for k > n.
LambdaPoly stirling2_degenerate(unsigned n, unsigned k);

/// prod_{j=1}^n [(x + (j-1)(r-s))_s - (n-j) lambda] as an XPoly.
XPoly rs_product_polynomial(unsigned n, unsigned r, unsigned s);

/// The raw alternating sum
/// ((-1)^k/k!) sum_p (-1)^p C(k,p) prod_j [(p+(j-1)(r-s))_s - (n-j) lambda],
/// valid for every k (it vanishes identically for k > ns).
LambdaPoly stirling_rs_alternating_sum(unsigned n, unsigned k, unsigned r, unsigned s);

/// S^{(r,s)}_lambda(n, k); zero beyond k = ns. Requires r >= s >= 1, n >= 1.
LambdaPoly stirling_rs_degenerate(unsigned n, unsigned k, unsigned r, unsigned s);
std::vector<LambdaPoly> stirling_rs_row(unsigned n, unsigned r, unsigned s);

/// S^{(r,r)}_lambda(n, k) via ((p)_r)_{n,lambda}. Requires r, n >= 1.
LambdaPoly stirling_rr_degenerate(unsigned n, unsigned k, unsigned r);

/// Coefficient of (x)_k in (x + r)_{n,lambda}.
LambdaPoly r_stirling_degenerate(unsigned n, unsigned k, unsigned r);
std::vector<LambdaPoly> r_stirling_row(unsigned n, unsigned r);

/// Unsigned degenerate Lah numbers: coefficients of (x)_k in
/// prod_{i=1}^n (x + (i-1) - (n-i) lambda).
LambdaPoly lah_degenerate(unsigned n, unsigned k);
std::vector<LambdaPoly> lah_row(unsigned n);
/// Signed degenerate Lah numbers: coefficients of <x>_k in
/// prod_{i=1}^n (x - (i-1) + (n-i) lambda).
LambdaPoly lah_signed_degenerate(unsigned n, unsigned k);
std::vector<LambdaPoly> lah_signed_row(unsigned n);

/// Falling-basis expansion of ((x)_r)_{n,lambda}. Requires n, r >= 1.
BasisCoeffs rr_basis_identity(unsigned n, unsigned r);

}  // namespace degen
