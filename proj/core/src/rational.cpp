#include "degen/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace degen {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("Rational: malformed integer");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    try {
      const mpz_class num = parse_integer(text.substr(0, slash));
      const auto den_text = text.substr(slash + 1);
      if (!all_digits(den_text)) throw bad();
      const mpz_class den(std::string(den_text), 10);
      if (den == 0) throw bad();
      return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
      throw bad();
    }
  }

  // Decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::string_view rest = text;
  bool negative = false;
  if (rest.front() == '+' || rest.front() == '-') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = rest.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) throw bad();
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    const auto int_part = rest.substr(0, dot);
    const auto frac_part = rest.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw bad();
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw bad();
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(rest)) throw bad();
    digits = std::string(rest);
  }

  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(mpq_class(mantissa * scale));
  return Rational(mpq_class(mantissa, scale));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (is_integer()) return value_.get_num().get_str();
  return str();
}

std::string Rational::decimal(int digits) const {
  // Enough binary precision for the requested decimal digits plus margin.
  const auto bits = static_cast<mp_bitcnt_t>(digits * 4 + 64);
  mpf_class f(value_, bits);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  const std::string fmt = "%." + std::to_string(digits) + "Fg";
  int written = gmp_snprintf(buf.data(), buf.size(), fmt.c_str(), f.get_mpf_t());
  if (written >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<std::size_t>(written) + 1);
    gmp_snprintf(buf.data(), buf.size(), fmt.c_str(), f.get_mpf_t());
  }
  return std::string(buf.data());
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(mpq_class(z));
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(mpq_class(z));
}

Rational falling_factorial(long m, unsigned k) {
  mpz_class z(1);
  for (unsigned i = 0; i < k; ++i) z *= (m - static_cast<long>(i));
  return Rational(mpq_class(z));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace degen
