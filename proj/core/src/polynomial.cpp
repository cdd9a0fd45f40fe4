#include "degen/polynomial.hpp"

#include <sstream>

namespace degen {

XPoly evaluate_lambda(const XPoly& p, const Rational& at) {
  return p.map_coefficients([&](const LambdaPoly& c) { return LambdaPoly(c.evaluate(at)); });
}

Rational evaluate(const XPoly& p, const Rational& x, const Rational& lam) {
  return p.evaluate(x).evaluate(lam);
}

std::string pretty(const LambdaPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto coeffs = p.coefficients();
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const Rational& c = coeffs[d];
    if (c.is_zero()) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    os << magnitude.pretty();
    if (d >= 1) os << '*' << var;
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

std::string pretty(const XPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto coeffs = p.coefficients();
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    if (!first) os << " + ";
    os << '(' << pretty(coeffs[d]) << ')';
    if (d >= 1) os << '*' << var;
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << pretty(p); }
std::ostream& operator<<(std::ostream& os, const XPoly& p) { return os << pretty(p); }

}  // namespace degen
