#include "degen/bell.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "degen/numbers.hpp"
#include "degen/series.hpp"

namespace degen {

namespace {

void require_rs(unsigned r, unsigned s) {
  if (s < 1 || r < s)
    throw std::invalid_argument("(r,s)-Bell requires r >= s >= 1 (got r=" + std::to_string(r) +
                                ", s=" + std::to_string(s) + ")");
}

void require_series_args(const Rational& x, const Rational& tol) {
  if (x.sign() <= 0) throw std::invalid_argument("Dobinski series requires x > 0");
  if (tol.sign() <= 0) throw std::invalid_argument("Dobinski series requires tol > 0");
}

XPoly from_power_coefficients(std::vector<LambdaPoly> coeffs) {
  return XPoly(std::move(coeffs));
}

const SeriesSpec& exp_minus_one_spec() {
  static const SeriesSpec spec{
      [](unsigned m) { return Rational(m % 2 == 0 ? 1 : -1); },
      [](unsigned) { return Rational(1); },
      0,
      0,
  };
  return spec;
}

}  // namespace

XPoly bell_rs_poly(unsigned n, unsigned r, unsigned s) {
  require_rs(r, s);
  if (n == 0) return XPoly(1L);
  return from_power_coefficients(stirling_rs_row(n, r, s));
}

Rational exp_weighted_partial_sum(const SeriesSpec& spec, const Rational& x, unsigned last) {
  Rational sum;
  Rational scale = pow(x, spec.start) / factorial(spec.start);
  for (unsigned m = spec.start; m <= last; ++m) {
    sum += spec.weight(m) * scale;
    scale *= x / Rational(m + 1);
  }
  return sum;
}

DobinskiResult exp_weighted_sum(const SeriesSpec& spec, const Rational& x, const Rational& budget) {
  if (budget.sign() <= 0) throw std::invalid_argument("exp_weighted_sum: budget must be positive");
  const Rational half(1, 2);
  Rational sum;
  Rational scale = pow(x, spec.start) / factorial(spec.start);  // x^m / m!
  for (unsigned m = spec.start;; ++m) {
    sum += spec.weight(m) * scale;
    if (m >= 1) {
      const Rational ratio =
          pow(Rational(m + 1) / Rational(m), spec.growth_degree) * x / Rational(m + 1);
      if (ratio <= half) {
        const Rational last = spec.majorant(m) * scale;
        // majorant terms shrink at least geometrically by 1/2 from here on
        if (last <= budget) return {sum, m - spec.start + 1, last};
      }
    }
    scale *= x / Rational(m + 1);
  }
}

DobinskiResult exp_damped_sum(const SeriesSpec& spec, const Rational& x, const Rational& tol) {
  Rational budget = tol / Rational(4);
  for (;;) {
    const DobinskiResult series = exp_weighted_sum(spec, x, budget);
    const Rational series_mag = abs(series.value) + series.tail_bound;
    const Rational one(1);
    const Rational exp_budget = tol / (Rational(4) * (series_mag > one ? series_mag : one));
    const DobinskiResult damping = exp_weighted_sum(exp_minus_one_spec(), x, exp_budget);
    // |E S - E' S'| <= |E - E'| (|S'| + dS) + |E'| dS
    const Rational bound = damping.tail_bound * series_mag + abs(damping.value) * series.tail_bound;
    if (bound <= tol) return {damping.value * series.value, series.terms_used, bound};
    budget /= Rational(2);
  }
}

DobinskiResult dobinski_eval(unsigned n, unsigned r, unsigned s, const Rational& x,
                             const Rational& lam, const Rational& tol) {
  require_rs(r, s);
  if (n < 1) throw std::invalid_argument("dobinski_eval requires n >= 1");
  require_series_args(x, tol);
  const Rational lam_abs = abs(lam);
  SeriesSpec spec{
      [=](unsigned k) {
        Rational product(1);
        for (unsigned j = 1; j <= n; ++j) {
          const long arg = static_cast<long>(k + (j - 1) * (r - s));
          product *= falling_factorial(arg, s) - lam * Rational(n - j);
        }
        return product;
      },
      [=](unsigned k) {
        Rational product(1);
        for (unsigned j = 1; j <= n; ++j) {
          const Rational arg(static_cast<long>(k + (j - 1) * (r - s)));
          product *= pow(arg, s) + lam_abs * Rational(n - j);
        }
        return product;
      },
      n * s,
      0,
  };
  return exp_damped_sum(spec, x, tol);
}

DobinskiResult dobinski_rr(unsigned k, unsigned r, const Rational& x, const Rational& lam,
                           const Rational& tol) {
  if (k < 1 || r < 1) throw std::invalid_argument("dobinski_rr requires k, r >= 1");
  require_series_args(x, tol);
  const Rational lam_abs = abs(lam);
  SeriesSpec spec{
      [=](unsigned m) {
        const Rational base = falling_factorial(m, r);
        Rational product(1);
        for (unsigned l = 0; l < k; ++l) product *= base - lam * Rational(l);
        return product;
      },
      [=](unsigned m) {
        const Rational base = pow(Rational(m), r);
        Rational product(1);
        for (unsigned l = 0; l < k; ++l) product *= base + lam_abs * Rational(l);
        return product;
      },
      r * k,
      1,
  };
  return exp_damped_sum(spec, x, tol);
}

Rational rising_factorial(const Rational& q, unsigned n) {
  Rational result(1);
  for (unsigned i = 0; i < n; ++i) result *= q + Rational(i);
  return result;
}

DobinskiResult gamma_formula_classical(unsigned n, unsigned r, unsigned s, const Rational& tol) {
  if (s < 1 || r <= s)
    throw std::invalid_argument("gamma_formula_classical requires r > s >= 1");
  if (n < 1) throw std::invalid_argument("gamma_formula_classical requires n >= 1");
  require_series_args(Rational(1), tol);
  const Rational gap(static_cast<long>(r - s));
  const Rational prefactor = pow(gap, s * n);
  SeriesSpec spec{
      [=](unsigned k) {
        Rational product = prefactor;
        for (unsigned l = 1; l <= s; ++l) {
          const Rational q = (Rational(static_cast<long>(k)) - Rational(l) + Rational(1)) / gap;
          product *= rising_factorial(q, n);
        }
        return product;
      },
      [=](unsigned k) {
        Rational product(1);
        for (unsigned j = 0; j < n; ++j) product *= pow(Rational(static_cast<long>(k + j * (r - s))), s);
        return product;
      },
      n * s,
      0,
  };
  return exp_damped_sum(spec, Rational(1), tol);
}

XPoly rr_bell_double_sum(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw std::invalid_argument("rr_bell_double_sum requires n, r >= 1");
  const unsigned top = n * r;
  std::vector<LambdaPoly> coeffs(top + 1);
  for (unsigned p = 0; p <= top; ++p) {
    const LambdaPoly base(falling_factorial(p, r));
    const LambdaPoly weight = generalized_falling_factorial(XPoly(base), n).coefficient(0);
    for (unsigned k = p; k <= top; ++k) {
      Rational c = binomial(k, p) / factorial(k);
      if ((k - p) % 2 == 1) c = -c;
      coeffs[k] += weight * LambdaPoly(c);
    }
  }
  return XPoly(std::move(coeffs));
}

XPoly r_bell_poly(unsigned n, unsigned r) { return from_power_coefficients(r_stirling_row(n, r)); }

RBellRecurrence r_bell_recurrence(unsigned n, unsigned r) {
  const XPoly x = x_var();
  const LambdaPoly lam = lambda();
  RBellRecurrence out;
  for (unsigned k = 0; k <= n; ++k) {
    const LambdaPoly binom(binomial(n, k));

    // C(n,k) (-lambda)^{n-k} (n-k)! (x phi^{(r+1)}_k + r phi^{(r)}_k)
    const LambdaPoly weight_a = binom * pow(-lam, n - k) * LambdaPoly(factorial(n - k));
    const XPoly inner_a = x * r_bell_poly(k, r + 1) + r_bell_poly(k, r).scaled(LambdaPoly(static_cast<long>(r)));
    out.via_shifted_order += inner_a.scaled(weight_a);

    // C(n,k) (r (-lambda)_{k,lambda} + x (1-lambda)_{k,lambda}) phi^{(r)}_{n-k}
    const LambdaPoly minus_lam_falling =
        generalized_falling_factorial(XPoly(-lam), k).coefficient(0);
    const LambdaPoly one_minus_lam_falling =
        generalized_falling_factorial(XPoly(LambdaPoly(1L) - lam), k).coefficient(0);
    const XPoly weight_b =
        XPoly(minus_lam_falling * LambdaPoly(static_cast<long>(r))) + x.scaled(one_minus_lam_falling);
    out.via_degenerate_weights += (weight_b * r_bell_poly(n - k, r)).scaled(binom);
  }
  return out;
}

}  // namespace degen
