#pragma once

// Degenerate (r,s)-Bell and r-Bell polynomials, their Dobinski-type series
// evaluations with rigorous truncation bounds, and the r-Bell recurrences.

#include <functional>

#include "degen/polynomial.hpp"

namespace degen {

/// Truncated evaluation of an infinite series in exact arithmetic.
/// |value - true sum| <= tail_bound, and tail_bound <= the requested tolerance.
struct DobinskiResult {
  Rational value;
  unsigned terms_used = 0;
  Rational tail_bound;
};

/// phi^{(r,s)}_{n,lambda}(x) = sum_k S^{(r,s)}_lambda(n,k) x^k.
/// n = 0 yields 1 by the empty-product convention.
XPoly bell_rs_poly(unsigned n, unsigned r, unsigned s);

/// Partial sum of sum_{m >= start} w(m) x^m / m! with a certified tail bound.
///
/// `majorant` must satisfy |w(m)| <= majorant(m) for m >= start and
/// majorant(m+1) / majorant(m) <= (1 + 1/m)^growth_degree for m >= 1. Terms are
/// added until m >= 1, the term-ratio bound (1 + 1/m)^D x / (m+1) is <= 1/2
/// and majorant(m) x^m / m! <= budget; the tail is then at most that last
/// majorant term.
struct SeriesSpec {
  std::function<Rational(unsigned)> weight;
  std::function<Rational(unsigned)> majorant;
  unsigned growth_degree = 0;
  unsigned start = 0;
};
DobinskiResult exp_weighted_sum(const SeriesSpec& spec, const Rational& x, const Rational& budget);
/// Partial sum over start <= m <= last, no tail handling.
Rational exp_weighted_partial_sum(const SeriesSpec& spec, const Rational& x, unsigned last);

/// e^{-x} times a series described by `spec`, with the product error budgeted
/// so the combined bound stays within tol.
DobinskiResult exp_damped_sum(const SeriesSpec& spec, const Rational& x, const Rational& tol);

/// e^{-x} sum_k (1/k!) prod_{j=1}^n [(k+(j-1)(r-s))_s - (n-j) lambda] x^k.
/// Requires x > 0, tol > 0, r >= s >= 1, n >= 1 (std::invalid_argument).
DobinskiResult dobinski_eval(unsigned n, unsigned r, unsigned s, const Rational& x,
                             const Rational& lam, const Rational& tol);

/// e^{-x} sum_{m >= 1} (x^m / m!) ((m)_r)_{k,lambda}. Requires k, r >= 1.
DobinskiResult dobinski_rr(unsigned k, unsigned r, const Rational& x, const Rational& lam,
                           const Rational& tol);

/// q (q+1) ... (q+n-1).
Rational rising_factorial(const Rational& q, unsigned n);

/// ((r-s)^{sn} / e) sum_k (1/k!) prod_{l=1}^s <q_kl>_n with q_kl = (k-l+1)/(r-s),
/// the Gamma ratios taken as exact rising factorials. Requires r > s >= 1, n >= 1.
DobinskiResult gamma_formula_classical(unsigned n, unsigned r, unsigned s, const Rational& tol);

/// sum_{p=0}^{nr} sum_{k=p}^{nr} ((-1)^{k-p}/k!) C(k,p) ((p)_r)_{n,lambda} x^k.
XPoly rr_bell_double_sum(unsigned n, unsigned r);

/// Degenerate r-Bell polynomial sum_k {n+r, k+r}_{r,lambda} x^k.
XPoly r_bell_poly(unsigned n, unsigned r);

/// The two right-hand sides expressing phi^{(r)}_{n+1,lambda}(x): one through
/// phi^{(r+1)} and phi^{(r)} with (-lambda)^{n-k}(n-k)! weights, the other
/// through r(-lambda)_{k,lambda} + x(1-lambda)_{k,lambda}.
struct RBellRecurrence {
  XPoly via_shifted_order;
  XPoly via_degenerate_weights;
};
RBellRecurrence r_bell_recurrence(unsigned n, unsigned r);

}  // namespace degen
