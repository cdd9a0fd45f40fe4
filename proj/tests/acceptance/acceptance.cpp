// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "degen/bell.hpp"
#include "degen/cli/commands.hpp"
#include "degen/numbers.hpp"
#include "degen/series_lab.hpp"
#include "degen/weyl.hpp"
#include "oracles.hpp"

using namespace degen;

namespace {

const Rational kDobinskiTol(1, 1000000000000L);  // 1e-12
const Rational kGammaTol(1, 10000000000L);       // 1e-10

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

std::string tag(unsigned n, unsigned r, unsigned s) {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
}

template <class F>
void grid(F&& f) {
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned s = 1; s <= r; ++s)
      for (unsigned n = 1; n <= 5; ++n) f(n, r, s);
}

void four_two_row(Tally& t) {
  std::ostringstream out, err;
  const int code = cli::run({"normal-order", "--n", "2", "--r", "4", "--s", "2"}, out, err);
  t.expect(code == 0, "normal-order exit code " + std::to_string(code));
  const NormalForm nf = cli::normal_form_from_json(cli::Json::parse(out.str()));
  const auto row = extract_stirling(nf, 2, 4, 2);
  const LambdaPoly l = lambda();
  const std::vector<LambdaPoly> expected{l.scaled(Rational(-2)), l.scaled(Rational(-4)), LambdaPoly(12L) - l,
                                         LambdaPoly(8L), LambdaPoly(1L)};
  for (unsigned k = 0; k <= 4; ++k)
    t.expect(row[k] == expected[k], "k=" + std::to_string(k) + " got " + pretty(row[k]));
  t.expect(nf.terms().size() == 5, "unexpected record count");
}

void triple_oracle(Tally& t) {
  grid([&](unsigned n, unsigned r, unsigned s) {
    const auto engine = extract_stirling(degenerate_product(n, r, s), n, r, s);
    for (unsigned k = 0; k <= n * s; ++k) {
      const LambdaPoly closed = stirling_rs_degenerate(n, k, r, s);
      t.expect(engine[k] == closed && differential_extract(n, r, s, k) == closed,
               tag(n, r, s) + " k=" + std::to_string(k));
    }
  });
  if (t.cases < 180) t.expect(false, "only " + std::to_string(t.cases) + " cells");
}

void product_identity(Tally& t) {
  grid([&](unsigned n, unsigned r, unsigned s) {
    const XPoly lhs = rs_product_polynomial(n, r, s);
    const XPoly rhs = from_basis({stirling_rs_row(n, r, s), Basis::falling});
    t.expect(lhs == rhs, tag(n, r, s) + " symbolic");
    for (long x = 0; x <= 8; ++x) {
      LambdaPoly direct(1L);
      for (unsigned j = 1; j <= n; ++j)
        direct *= LambdaPoly(falling_factorial(x + static_cast<long>((j - 1) * (r - s)), s)) -
                  lambda().scaled(Rational(static_cast<long>(n - j)));
      t.expect(direct == rhs.evaluate(Rational(x)) && direct == lhs.evaluate(Rational(x)),
               tag(n, r, s) + " x=" + std::to_string(x));
    }
  });
}

void vanishing(Tally& t) {
  grid([&](unsigned n, unsigned r, unsigned s) {
    for (unsigned k = n * s + 1; k <= n * s + 5; ++k)
      t.expect(stirling_rs_alternating_sum(n, k, r, s).is_zero(), tag(n, r, s) + " k=" + std::to_string(k));
  });
}

void classical_limits(Tally& t) {
  const Rational zero(0);
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned k = 0; k <= n; ++k)
      t.expect(stirling_rs_degenerate(n, k, 1, 1).evaluate(zero) == Rational(oracles::count_set_partitions(n, k)),
               "S(1,1) n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (unsigned n = 1; n <= 6; ++n) {
    const auto rising = oracles::falling_coefficients_by_evaluation(rising_factorial_poly(n));
    for (unsigned k = 0; k <= n; ++k) {
      const Rational lah = oracles::classical_lah(n, k);
      t.expect(rising[k] == LambdaPoly(lah), "Lah oracle n=" + std::to_string(n) + " k=" + std::to_string(k));
      t.expect(stirling_rs_degenerate(n, k, 2, 1).evaluate(zero) == lah,
               "S(2,1) n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  grid([&](unsigned n, unsigned r, unsigned s) {
    std::string w;
    for (unsigned i = 0; i < n; ++i) w += oracles::word(r, s);
    const NormalForm brute = oracles::normal_order_word(w);
    for (unsigned k = 0; k <= n * s; ++k)
      t.expect(stirling_rs_degenerate(n, k, r, s).evaluate(zero) ==
                   brute.coefficient(n * (r - s) + k, k).evaluate(zero),
               tag(n, r, s) + " k=" + std::to_string(k));
  });
}

void equal_powers(Tally& t) {
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned n = 1; n <= 5; ++n)
      for (unsigned k = 0; k < r; ++k)
        t.expect(stirling_rr_degenerate(n, k, r).is_zero(), tag(n, r, r) + " k=" + std::to_string(k));
  for (unsigned r = 1; r <= 5; ++r)
    t.expect(stirling_rr_degenerate(1, r, r) == LambdaPoly(1L), "S(1,r) r=" + std::to_string(r));
}

void basis_identity(Tally& t) {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned n = 1; n <= 4; ++n) {
      const BasisCoeffs basis = rr_basis_identity(n, r);
      for (unsigned k = 0; k <= n * r; ++k)
        t.expect(basis[k] == stirling_rr_degenerate(n, k, r), tag(n, r, r) + " k=" + std::to_string(k));
    }
}

void dobinski(Tally& t) {
  const Rational lambdas[] = {Rational(0), Rational(1, 2), Rational(1)};
  const Rational xs[] = {Rational(1, 2), Rational(1), Rational(2)};
  grid([&](unsigned n, unsigned r, unsigned s) {
    const XPoly bell = bell_rs_poly(n, r, s);
    for (const auto& lam : lambdas)
      for (const auto& x : xs) {
        const Rational exact = evaluate(bell, x, lam);
        const auto where = tag(n, r, s) + " x=" + x.str() + " lambda=" + lam.str();
        const DobinskiResult res = dobinski_eval(n, r, s, x, lam, kDobinskiTol);
        t.expect(abs(res.value - exact) <= kDobinskiTol && res.tail_bound <= kDobinskiTol, where);
        if (r == s) {
          const DobinskiResult rr = dobinski_rr(n, r, x, lam, kDobinskiTol);
          t.expect(abs(rr.value - exact) <= kDobinskiTol, where + " (equal powers)");
        }
      }
  });
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned n = 1; n <= 4; ++n)
      t.expect(rr_bell_double_sum(n, r) == bell_rs_poly(n, r, r), tag(n, r, r) + " double sum");
}

void gamma_ratio(Tally& t) {
  for (unsigned r = 2; r <= 4; ++r)
    for (unsigned s = 1; s < r; ++s)
      for (unsigned n = 1; n <= 4; ++n) {
        const Rational exact = evaluate(bell_rs_poly(n, r, s), Rational(1), Rational(0));
        const DobinskiResult res = gamma_formula_classical(n, r, s, kGammaTol);
        t.expect(abs(res.value - exact) <= kGammaTol, tag(n, r, s));
      }
  const DobinskiResult four_two = gamma_formula_classical(2, 4, 2, kGammaTol);
  t.expect(abs(four_two.value - Rational(21)) <= kGammaTol, "(4,2) n=2 value 21");
}

void egf(Tally& t) {
  const std::size_t order = 10;
  std::vector<IdentityReport> reports;
  for (unsigned k = 0; k <= order; ++k) reports.push_back(stirling_egf_check(k, order));
  reports.push_back(bell_egf_check(order));
  for (unsigned r = 0; r <= 3; ++r) reports.push_back(r_bell_egf_check(r, order));
  for (unsigned r = 1; r <= 3; ++r) reports.push_back(rr_egf_check(r, order));
  for (const auto& rep : reports) t.expect(rep.pass && rep.order == order, rep.identity);
}

void recurrence(Tally& t) {
  for (unsigned r = 0; r <= 3; ++r)
    for (unsigned n = 0; n <= 8; ++n) {
      const auto rec = r_bell_recurrence(n, r);
      const XPoly target = r_bell_poly(n + 1, r);
      const auto where = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      t.expect(rec.via_shifted_order == target, where + " shifted order");
      t.expect(rec.via_degenerate_weights == target, where + " degenerate weights");
      const LambdaPoly at_one = target.evaluate(Rational(1));
      t.expect(rec.via_shifted_order.evaluate(Rational(1)) == at_one &&
                   rec.via_degenerate_weights.evaluate(Rational(1)) == at_one,
               where + " at x=1");
    }
}

void lah(Tally& t) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto signed_oracle = oracles::rising_coefficients_by_evaluation(falling_factorial_poly(n));
    for (unsigned k = 0; k <= n; ++k) {
      const auto where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      t.expect(lah_degenerate(n, k) == stirling_rs_degenerate(n, k, 2, 1), where);
      t.expect(LambdaPoly(lah_signed_degenerate(n, k).evaluate(Rational(0))) == signed_oracle[k],
               where + " signed");
    }
  }
}

struct Criterion {
  const char* name;
  std::function<void(Tally&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"S^(4,2)(2,k) via normal-order", four_two_row},
      {"triple oracle equality", triple_oracle},
      {"product polynomial identity", product_identity},
      {"vanishing beyond ns", vanishing},
      {"classical limits at lambda=0", classical_limits},
      {"equal powers vanish below r, S(1,r)=1", equal_powers},
      {"equal powers falling-basis identity", basis_identity},
      {"Dobinski series within 1e-12, double sum", dobinski},
      {"Gamma-ratio series within 1e-10", gamma_ratio},
      {"EGF suite at order 10", egf},
      {"r-Bell recurrence n<=8, r<=3", recurrence},
      {"degenerate Lah identity", lah},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].body(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0 && t.cases > 0;
    if (!ok) ++failed;
    std::printf("%s %2zu %-44s cases=%-5zu %8.1f ms%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                t.cases, ms, ok ? "" : "  first failure: ", ok ? "" : t.first.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
