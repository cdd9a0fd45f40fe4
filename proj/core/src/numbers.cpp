#include "degen/numbers.hpp"

#include <stdexcept>
#include <string>

#include "degen/series.hpp"

namespace degen {

namespace {

LambdaPoly constant(long c) { return LambdaPoly(c); }

XPoly shifted_x(const LambdaPoly& shift) { return x_var() + XPoly(shift); }

void require_rs(unsigned n, unsigned r, unsigned s) {
  if (s < 1 || r < s || n < 1)
    throw std::invalid_argument("(r,s) family requires r >= s >= 1 and n >= 1 (got n=" +
                                std::to_string(n) + ", r=" + std::to_string(r) +
                                ", s=" + std::to_string(s) + ")");
}

BasisCoeffs convert(const XPoly& p, Basis basis) {
  BasisCoeffs out;
  out.basis = basis;
  XPoly rest = p;
  // q_k = c_k + (x - root_k) q_{k+1}, so each division yields c_k as remainder.
  for (long k = 0; !rest.is_zero(); ++k) {
    const LambdaPoly root = constant(basis == Basis::falling ? k : -k);
    auto [quotient, remainder] = divide_by_linear(rest, root);
    out.coefficients.push_back(std::move(remainder));
    rest = std::move(quotient);
  }
  return out;
}

// (m)_{n,lambda} for an integer or polynomial-valued argument m.
LambdaPoly gen_falling_at(const LambdaPoly& m, unsigned n) {
  LambdaPoly result(1L);
  for (unsigned j = 0; j < n; ++j) result = result * (m - lambda() * constant(j));
  return result;
}

LambdaPoly signed_inverse_factorial(unsigned k) {
  Rational c = Rational(1) / factorial(k);
  return LambdaPoly(k % 2 == 1 ? -c : c);
}

LambdaPoly row_entry(const std::vector<LambdaPoly>& row, unsigned k) {
  return k < row.size() ? row[k] : LambdaPoly{};
}

}  // namespace

XPoly falling_factorial_poly(unsigned n) {
  XPoly result(1L);
  for (unsigned j = 0; j < n; ++j) result = result * shifted_x(constant(-static_cast<long>(j)));
  return result;
}

XPoly rising_factorial_poly(unsigned n) {
  XPoly result(1L);
  for (unsigned j = 0; j < n; ++j) result = result * shifted_x(constant(j));
  return result;
}

XPoly gen_falling_factorial(unsigned n) { return generalized_falling_factorial(x_var(), n); }

BasisCoeffs to_falling_basis(const XPoly& p) { return convert(p, Basis::falling); }
BasisCoeffs to_rising_basis(const XPoly& p) { return convert(p, Basis::rising); }

XPoly from_basis(const BasisCoeffs& b) {
  XPoly out;
  for (std::size_t k = 0; k < b.coefficients.size(); ++k) {
    const unsigned kk = static_cast<unsigned>(k);
    const XPoly element =
        b.basis == Basis::falling ? falling_factorial_poly(kk) : rising_factorial_poly(kk);
    out += element.scaled(b.coefficients[k]);
  }
  return out;
}

LambdaPoly stirling2_degenerate(unsigned n, unsigned k) {
  if (k > n) return {};
  LambdaPoly sum;
  for (unsigned p = 0; p <= k; ++p) {
    LambdaPoly term = gen_falling_at(constant(p), n) * LambdaPoly(binomial(k, p));
    if (p % 2 == 1) sum -= term;
    else sum += term;
  }
  return sum * signed_inverse_factorial(k);
}

XPoly rs_product_polynomial(unsigned n, unsigned r, unsigned s) {
  require_rs(n, r, s);
  XPoly result(1L);
  for (unsigned j = 1; j <= n; ++j) {
    XPoly factor(1L);
    const long base = static_cast<long>((j - 1) * (r - s));
    for (unsigned i = 0; i < s; ++i) factor = factor * shifted_x(constant(base - static_cast<long>(i)));
    result = result * (factor - XPoly(lambda() * constant(n - j)));
  }
  return result;
}

LambdaPoly stirling_rs_alternating_sum(unsigned n, unsigned k, unsigned r, unsigned s) {
  require_rs(n, r, s);
  LambdaPoly sum;
  for (unsigned p = 0; p <= k; ++p) {
    LambdaPoly product(1L);
    for (unsigned j = 1; j <= n; ++j) {
      const long arg = static_cast<long>(p + (j - 1) * (r - s));
      product = product * (LambdaPoly(falling_factorial(arg, s)) - lambda() * constant(n - j));
    }
    product = product * LambdaPoly(binomial(k, p));
    if (p % 2 == 1) sum -= product;
    else sum += product;
  }
  return sum * signed_inverse_factorial(k);
}

LambdaPoly stirling_rs_degenerate(unsigned n, unsigned k, unsigned r, unsigned s) {
  require_rs(n, r, s);
  if (k > n * s) {
    if (!stirling_rs_alternating_sum(n, k, r, s).is_zero())
      throw std::logic_error("stirling_rs_degenerate: alternating sum does not vanish beyond ns");
    return {};
  }
  return stirling_rs_alternating_sum(n, k, r, s);
}

std::vector<LambdaPoly> stirling_rs_row(unsigned n, unsigned r, unsigned s) {
  require_rs(n, r, s);
  std::vector<LambdaPoly> row;
  row.reserve(n * s + 1);
  for (unsigned k = 0; k <= n * s; ++k) row.push_back(stirling_rs_alternating_sum(n, k, r, s));
  return row;
}

LambdaPoly stirling_rr_degenerate(unsigned n, unsigned k, unsigned r) {
  if (r < 1 || n < 1)
    throw std::invalid_argument("stirling_rr_degenerate requires r, n >= 1");
  if (k > n * r) return {};
  LambdaPoly sum;
  for (unsigned p = 0; p <= k; ++p) {
    LambdaPoly term = gen_falling_at(LambdaPoly(falling_factorial(p, r)), n) *
                      LambdaPoly(binomial(k, p));
    if (p % 2 == 1) sum -= term;
    else sum += term;
  }
  return sum * signed_inverse_factorial(k);
}

std::vector<LambdaPoly> r_stirling_row(unsigned n, unsigned r) {
  return to_falling_basis(generalized_falling_factorial(shifted_x(constant(r)), n)).coefficients;
}

LambdaPoly r_stirling_degenerate(unsigned n, unsigned k, unsigned r) {
  return row_entry(r_stirling_row(n, r), k);
}

namespace {

XPoly lah_product(unsigned n, bool signed_variant) {
  XPoly result(1L);
  for (unsigned i = 1; i <= n; ++i) {
    const LambdaPoly shift = constant(i - 1) - lambda() * constant(n - i);
    result = result * shifted_x(signed_variant ? -shift : shift);
  }
  return result;
}

}  // namespace

std::vector<LambdaPoly> lah_row(unsigned n) {
  return to_falling_basis(lah_product(n, false)).coefficients;
}
LambdaPoly lah_degenerate(unsigned n, unsigned k) { return row_entry(lah_row(n), k); }

std::vector<LambdaPoly> lah_signed_row(unsigned n) {
  return to_rising_basis(lah_product(n, true)).coefficients;
}
LambdaPoly lah_signed_degenerate(unsigned n, unsigned k) { return row_entry(lah_signed_row(n), k); }

BasisCoeffs rr_basis_identity(unsigned n, unsigned r) {
  if (r < 1 || n < 1) throw std::invalid_argument("rr_basis_identity requires n, r >= 1");
  return to_falling_basis(generalized_falling_factorial(falling_factorial_poly(r), n));
}

}  // namespace degen
