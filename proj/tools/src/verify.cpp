#include <array>
#include <functional>
#include <sstream>

#include "degen/bell.hpp"
#include "degen/cli/commands.hpp"
#include "degen/numbers.hpp"
#include "degen/series_lab.hpp"
#include "degen/weyl.hpp"

namespace degen::cli {

namespace {

// Accumulates cases for one named check and keeps the first failure.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.counterexample = describe();
    }
  }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string params(unsigned n, unsigned r, unsigned s) {
  std::ostringstream os;
  os << "n=" << n << " r=" << r << " s=" << s;
  return os.str();
}

template <class F>
void for_each_rs(const VerifyBounds& b, F&& f) {
  for (unsigned r = 1; r <= b.max_r; ++r)
    for (unsigned s = 1; s <= std::min(r, b.max_s); ++s)
      for (unsigned n = 1; n <= b.max_n; ++n) f(n, r, s);
}

std::vector<CheckResult> oracle_checks(const VerifyBounds& b) {
  std::vector<CheckResult> out;

  Check triple("triple_oracle");
  Check product("product_identity");
  Check vanishing("vanishing_beyond_ns");
  Check limit("classical_limit_normal_ordering");
  for_each_rs(b, [&](unsigned n, unsigned r, unsigned s) {
    const NormalForm nf = degenerate_product(n, r, s);
    const auto engine = extract_stirling(nf, n, r, s);
    const auto closed = stirling_rs_row(n, r, s);
    for (unsigned k = 0; k <= n * s; ++k) {
      const LambdaPoly diff = differential_extract(n, r, s, k);
      triple.expect(engine[k] == closed[k] && diff == closed[k], [&] {
        return params(n, r, s) + " k=" + std::to_string(k) + ": engine " + pretty(engine[k]) +
               ", differential " + pretty(diff) + ", closed form " + pretty(closed[k]);
      });
    }

    const XPoly lhs = rs_product_polynomial(n, r, s);
    product.expect(from_basis({closed, Basis::falling}) == lhs,
                   [&] { return params(n, r, s) + ": symbolic expansion differs"; });
    for (unsigned p = 0; p <= 8; ++p) {
      const MonomialImage image = apply_to_monomial(nf, p);
      const auto& terms = image.terms();
      const LambdaPoly expected = lhs.evaluate(Rational(static_cast<long>(p)));
      const bool single = terms.size() <= 1;
      const bool match =
          terms.empty() ? expected.is_zero()
                        : (terms.begin()->first == p + n * (r - s) && terms.begin()->second == expected);
      product.expect(single && match,
                     [&] { return params(n, r, s) + " at x=" + std::to_string(p); });
    }

    for (unsigned k = n * s + 1; k <= n * s + 5; ++k)
      vanishing.expect(stirling_rs_alternating_sum(n, k, r, s).is_zero(),
                       [&] { return params(n, r, s) + " k=" + std::to_string(k); });

    NormalForm power = NormalForm::term(r, s);
    for (unsigned i = 1; i < n; ++i) power = nf_multiply(power, NormalForm::term(r, s));
    limit.expect(power == nf.evaluate_lambda(Rational(0)),
                 [&] { return params(n, r, s) + ": lambda=0 differs from ((a+)^r a^s)^n"; });
  });
  out.push_back(triple.done());
  out.push_back(product.done());
  out.push_back(vanishing.done());
  out.push_back(limit.done());

  Check rr("rr_structure");
  for (unsigned r = 1; r <= b.max_r; ++r)
    for (unsigned n = 1; n <= b.max_n; ++n) {
      for (unsigned k = 0; k < r; ++k)
        rr.expect(stirling_rr_degenerate(n, k, r).is_zero(),
                  [&] { return "S^(r,r)(n,k) != 0 below r: " + params(n, r, r) + " k=" + std::to_string(k); });
      const BasisCoeffs basis = rr_basis_identity(n, r);
      for (unsigned k = 0; k <= n * r; ++k) {
        const LambdaPoly closed = stirling_rr_degenerate(n, k, r);
        rr.expect(basis[k] == closed && closed == stirling_rs_degenerate(n, k, r, r),
                  [&] { return "basis identity: " + params(n, r, r) + " k=" + std::to_string(k); });
      }
    }
  for (unsigned r = 1; r <= b.max_r + 2; ++r)
    rr.expect(stirling_rr_degenerate(1, r, r) == LambdaPoly(1L),
              [&] { return "S^(r,r)(1,r) != 1 for r=" + std::to_string(r); });
  out.push_back(rr.done());

  Check plain("stirling2_consistency");
  for (unsigned n = 1; n <= b.max_n + 3; ++n) {
    const BasisCoeffs basis = to_falling_basis(gen_falling_factorial(n));
    for (unsigned k = 0; k <= n; ++k) {
      const LambdaPoly v = stirling2_degenerate(n, k);
      plain.expect(v == basis[k] && v == stirling_rs_degenerate(n, k, 1, 1),
                   [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
  out.push_back(plain.done());

  Check lah("lah_identity");
  for (unsigned n = 1; n <= b.max_n + 1; ++n) {
    const auto row = lah_row(n);
    const auto rs = stirling_rs_row(n, 2, 1);
    for (unsigned k = 0; k <= n; ++k)
      lah.expect((k < row.size() ? row[k] : LambdaPoly{}) == rs[k],
                 [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
  }
  out.push_back(lah.done());
  return out;
}

CheckResult report_check(std::string name, const std::vector<IdentityReport>& reports) {
  Check c(std::move(name));
  for (const auto& rep : reports)
    c.expect(rep.pass, [&] {
      std::string msg = rep.identity;
      if (rep.first_mismatch)
        msg += " n=" + std::to_string(rep.first_mismatch->n) + ": expected " +
               pretty(rep.first_mismatch->expected) + ", series " + pretty(rep.first_mismatch->actual);
      return msg;
    });
  return c.done();
}

std::vector<CheckResult> egf_checks(const VerifyBounds& b) {
  std::vector<IdentityReport> stirling, bell, r_bell, rr;
  for (unsigned k = 0; k <= std::min<std::size_t>(b.max_k, b.order); ++k)
    stirling.push_back(stirling_egf_check(k, b.order));
  bell.push_back(bell_egf_check(b.order));
  for (unsigned r = 0; r <= b.max_r; ++r) r_bell.push_back(r_bell_egf_check(r, b.order));
  for (unsigned r = 1; r <= b.max_r; ++r) rr.push_back(rr_egf_check(r, b.order));
  return {report_check("stirling_egf", stirling), report_check("bell_egf", bell),
          report_check("r_bell_egf", r_bell), report_check("rr_egf", rr)};
}

std::vector<CheckResult> recurrence_checks(const VerifyBounds& b) {
  Check c("r_bell_recurrence");
  for (unsigned r = 0; r <= b.max_r; ++r)
    for (unsigned n = 0; n <= b.max_n; ++n) {
      const auto rec = r_bell_recurrence(n, r);
      const XPoly target = r_bell_poly(n + 1, r);
      const auto tag = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      c.expect(rec.via_shifted_order == target, [&] { return tag + ": shifted-order form"; });
      c.expect(rec.via_degenerate_weights == target, [&] { return tag + ": degenerate-weight form"; });
      const LambdaPoly at_one = target.evaluate(Rational(1));
      c.expect(rec.via_shifted_order.evaluate(Rational(1)) == at_one &&
                   rec.via_degenerate_weights.evaluate(Rational(1)) == at_one,
               [&] { return tag + ": x=1 specialization"; });
    }
  return {c.done()};
}

std::vector<CheckResult> dobinski_checks(const VerifyBounds& b) {
  const std::array<Rational, 3> lambdas{Rational(0), Rational(1, 2), Rational(1)};
  const std::array<Rational, 3> xs{Rational(1, 2), Rational(1), Rational(2)};

  Check series("dobinski_series");
  Check rr_series("dobinski_rr_series");
  for_each_rs(b, [&](unsigned n, unsigned r, unsigned s) {
    const XPoly bell = bell_rs_poly(n, r, s);
    for (const auto& lam : lambdas)
      for (const auto& x : xs) {
        const Rational exact = evaluate(bell, x, lam);
        const auto tag = [&] {
          return params(n, r, s) + " x=" + x.str() + " lambda=" + lam.str();
        };
        const DobinskiResult res = dobinski_eval(n, r, s, x, lam, b.tol);
        series.expect(res.tail_bound <= b.tol && abs(res.value - exact) <= res.tail_bound, tag);
        if (r == s) {
          const DobinskiResult rr = dobinski_rr(n, r, x, lam, b.tol);
          rr_series.expect(rr.tail_bound <= b.tol && abs(rr.value - exact) <= rr.tail_bound, tag);
        }
      }
  });

  Check double_sum("rr_double_sum");
  for (unsigned r = 1; r <= b.max_r; ++r)
    for (unsigned n = 1; n <= std::min(b.max_n, 4U); ++n)
      double_sum.expect(rr_bell_double_sum(n, r) == bell_rs_poly(n, r, r),
                        [&] { return params(n, r, r); });

  Check gamma("gamma_ratio_series");
  const Rational gamma_tol = b.tol;
  for (unsigned r = 2; r <= b.max_r + 1; ++r)
    for (unsigned s = 1; s < r; ++s)
      for (unsigned n = 1; n <= std::min(b.max_n, 4U); ++n) {
        const Rational exact = evaluate(bell_rs_poly(n, r, s), Rational(1), Rational(0));
        const DobinskiResult res = gamma_formula_classical(n, r, s, gamma_tol);
        gamma.expect(res.tail_bound <= gamma_tol && abs(res.value - exact) <= res.tail_bound,
                     [&] { return params(n, r, s); });
      }
  return {series.done(), rr_series.done(), double_sum.done(), gamma.done()};
}

}  // namespace

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SuiteReport run_suite(std::string_view suite, const VerifyBounds& bounds) {
  if (bounds.max_n < 1 || bounds.max_r < 1 || bounds.max_s < 1)
    throw UsageError("verify bounds must be positive");
  if (bounds.tol.sign() <= 0) throw UsageError("verify requires tol > 0");

  SuiteReport report{std::string(suite), {}};
  const auto append = [&](std::vector<CheckResult> checks) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  };
  const bool all = suite == "all";
  if (!all && suite != "oracles" && suite != "egf" && suite != "recurrence" && suite != "dobinski")
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  if (all || suite == "oracles") append(oracle_checks(bounds));
  if (all || suite == "egf") append(egf_checks(bounds));
  if (all || suite == "recurrence") append(recurrence_checks(bounds));
  if (all || suite == "dobinski") append(dobinski_checks(bounds));
  return report;
}

Json to_json(const SuiteReport& report) {
  Json out;
  out["suite"] = report.suite;
  out["pass"] = report.pass();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["name"] = c.name;
    j["cases"] = c.cases;
    j["pass"] = c.pass;
    j["counterexample"] = c.pass ? Json(nullptr) : Json(c.counterexample);
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  return out;
}

int exit_code_for(const SuiteReport& report) {
  return report.pass() ? kSuccess : kVerificationFailed;
}

}  // namespace degen::cli
