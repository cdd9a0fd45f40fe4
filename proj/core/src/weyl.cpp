#include "degen/weyl.hpp"

#include <algorithm>
#include <string>

namespace degen {

NormalForm::NormalForm(std::initializer_list<std::pair<const Ordering, LambdaPoly>> terms) {
  for (const auto& [key, c] : terms) add(key, c);
}

NormalForm NormalForm::term(unsigned i, unsigned j, LambdaPoly c) {
  NormalForm nf;
  nf.add({i, j}, c);
  return nf;
}

LambdaPoly NormalForm::coefficient(unsigned i, unsigned j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? LambdaPoly{} : it->second;
}

void NormalForm::add(Ordering key, const LambdaPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
  for (const auto& [key, c] : o.terms_) add(key, c);
  return *this;
}

NormalForm operator-(NormalForm a, const NormalForm& b) {
  for (const auto& [key, c] : b.terms_) a.add(key, -c);
  return a;
}

// (a^+)^i a^j (a^+)^k a^l with a^j (a^+)^k = sum_m C(j,m) C(k,m) m! (a^+)^{k-m} a^{j-m}.
NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [lk, lc] : a.terms_) {
    for (const auto& [rk, rc] : b.terms_) {
      const LambdaPoly product = lc * rc;
      const unsigned j = lk.annihilation;
      const unsigned k = rk.creation;
      const unsigned top = std::min(j, k);
      for (unsigned m = 0; m <= top; ++m) {
        const Rational weight = binomial(j, m) * binomial(k, m) * factorial(m);
        out.add({lk.creation + k - m, j - m + rk.annihilation}, product * LambdaPoly(weight));
      }
    }
  }
  return out;
}

NormalForm NormalForm::evaluate_lambda(const Rational& at) const {
  NormalForm out;
  for (const auto& [key, c] : terms_) out.add(key, LambdaPoly(c.evaluate(at)));
  return out;
}

NormalForm nf_multiply(const NormalForm& left, const NormalForm& right) { return left * right; }

namespace {

void require_rs(unsigned n, unsigned r, unsigned s) {
  if (s < 1 || r < s || n < 1)
    throw std::invalid_argument("degenerate product requires r >= s >= 1 and n >= 1 (got n=" +
                                std::to_string(n) + ", r=" + std::to_string(r) +
                                ", s=" + std::to_string(s) + ")");
}

}  // namespace

NormalForm degenerate_factor(unsigned k, unsigned r, unsigned s) {
  NormalForm f = NormalForm::term(r, s);
  f.add({r - s, 0}, -(lambda() * LambdaPoly(static_cast<long>(k))));
  return f;
}

NormalForm degenerate_product(unsigned n, unsigned r, unsigned s) {
  require_rs(n, r, s);
  NormalForm product = degenerate_factor(0, r, s);
  for (unsigned k = 1; k < n; ++k) {
    if constexpr (kZeroShiftFactorLeftmost) product = product * degenerate_factor(k, r, s);
    else product = degenerate_factor(k, r, s) * product;
  }
  return product;
}

std::vector<LambdaPoly> extract_stirling(const NormalForm& nf, unsigned n, unsigned r, unsigned s) {
  require_rs(n, r, s);
  const unsigned shift = n * (r - s);
  const unsigned top = n * s;
  for (const auto& [key, c] : nf.terms()) {
    if (key.creation < key.annihilation || key.creation - key.annihilation != shift ||
        key.annihilation > top)
      throw StructureError("extract_stirling: term (" + std::to_string(key.creation) + ", " +
                           std::to_string(key.annihilation) + ") is off the diagonal i - j = " +
                           std::to_string(shift));
  }
  std::vector<LambdaPoly> row(top + 1);
  for (unsigned k = 0; k <= top; ++k) row[k] = nf.coefficient(shift + k, k);
  return row;
}

MonomialImage MonomialImage::monomial(unsigned p, LambdaPoly c) {
  MonomialImage m;
  m.add(p, c);
  return m;
}

void MonomialImage::add(unsigned exponent, const LambdaPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MonomialImage& MonomialImage::operator+=(const MonomialImage& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LambdaPoly MonomialImage::at_one() const {
  LambdaPoly sum;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

XPoly MonomialImage::to_xpoly() const {
  XPoly out;
  for (const auto& [e, c] : terms_) out += XPoly::monomial(c, e);
  return out;
}

MonomialImage apply_to_monomial(const NormalForm& nf, unsigned p) {
  MonomialImage out;
  for (const auto& [key, c] : nf.terms()) {
    // (d/dx)^j x^p = (p)_j x^{p-j}, which vanishes for j > p.
    if (key.annihilation > p) continue;
    out.add(p + key.creation - key.annihilation,
            c * LambdaPoly(falling_factorial(static_cast<long>(p), key.annihilation)));
  }
  return out;
}

MonomialImage apply(const NormalForm& nf, const MonomialImage& f) {
  MonomialImage out;
  for (const auto& [p, c] : f.terms()) {
    const MonomialImage image = apply_to_monomial(nf, p);
    for (const auto& [e, v] : image.terms()) out.add(e, c * v);
  }
  return out;
}

LambdaPoly differential_extract(unsigned n, unsigned r, unsigned s, unsigned k) {
  require_rs(n, r, s);
  MonomialImage f;
  for (unsigned p = 0; p <= k; ++p) {
    Rational c = binomial(k, p);
    if (p % 2 == 1) c = -c;
    f.add(p, LambdaPoly(c));
  }
  // The rightmost factor acts first.
  for (unsigned step = 0; step < n; ++step) {
    const unsigned shift = kZeroShiftFactorLeftmost ? n - 1 - step : step;
    f = apply(degenerate_factor(shift, r, s), f);
  }
  Rational scale = Rational(1) / factorial(k);
  if (k % 2 == 1) scale = -scale;
  return f.at_one() * LambdaPoly(scale);
}

}  // namespace degen
