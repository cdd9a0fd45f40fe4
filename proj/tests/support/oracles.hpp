#pragma once

// Brute-force oracles used only by tests. None of these call into the
// basis-conversion, closed-form or reordering code they are checked against.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "degen/polynomial.hpp"
#include "degen/weyl.hpp"

namespace degen::oracles {

/// Number of partitions of {1..n} into exactly k blocks, by enumerating
/// restricted growth strings.
inline long count_set_partitions(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<unsigned> rgs(n, 0);
  long count = 0;
  const auto recurse = [&](auto&& self, unsigned pos, unsigned blocks) -> void {
    if (pos == n) {
      if (blocks == k) ++count;
      return;
    }
    for (unsigned b = 0; b <= blocks && b < k; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rgs[0] = 0;
  recurse(recurse, 1, 1);
  return count;
}

/// Classical unsigned Lah number C(n-1, k-1) n! / k!.
inline Rational classical_lah(unsigned n, unsigned k) {
  if (n == 0 && k == 0) return Rational(1);
  if (k == 0 || k > n) return Rational(0);
  return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
}

/// Expands p in the falling basis by evaluating at x = 0, 1, ..., deg p and
/// solving the resulting lower-triangular system ((m)_k = 0 for k > m).
inline std::vector<LambdaPoly> falling_coefficients_by_evaluation(const XPoly& p) {
  const long degree = p.degree();
  std::vector<LambdaPoly> c;
  for (long m = 0; m <= degree; ++m) {
    LambdaPoly value = p.evaluate(Rational(m));
    for (long k = 0; k < m; ++k)
      value -= c[static_cast<std::size_t>(k)] * LambdaPoly(falling_factorial(m, static_cast<unsigned>(k)));
    c.push_back(value * LambdaPoly(Rational(1) / factorial(static_cast<unsigned>(m))));
  }
  return c;
}

/// Rising-basis analogue, evaluating at x = 0, -1, ..., -deg p
/// (<-m>_k = 0 for k > m and <-m>_m = (-1)^m m!).
inline std::vector<LambdaPoly> rising_coefficients_by_evaluation(const XPoly& p) {
  const long degree = p.degree();
  const auto rising_at = [](long at, unsigned k) {
    Rational v(1);
    for (unsigned i = 0; i < k; ++i) v *= Rational(at + static_cast<long>(i));
    return v;
  };
  std::vector<LambdaPoly> c;
  for (long m = 0; m <= degree; ++m) {
    LambdaPoly value = p.evaluate(Rational(-m));
    for (long k = 0; k < m; ++k)
      value -= c[static_cast<std::size_t>(k)] * LambdaPoly(rising_at(-m, static_cast<unsigned>(k)));
    c.push_back(value * LambdaPoly(Rational(1) / rising_at(-m, static_cast<unsigned>(m))));
  }
  return c;
}

/// Normal form of a word in 'A' (a^dagger) and 'a', built letter by letter:
/// right-multiplying by a^dagger uses a^j a^dagger = a^dagger a^j + j a^{j-1}.
inline NormalForm normal_order_word(const std::string& word) {
  std::map<Ordering, LambdaPoly> terms{{Ordering{0, 0}, LambdaPoly(1L)}};
  for (char letter : word) {
    std::map<Ordering, LambdaPoly> next;
    const auto add = [&](Ordering key, const LambdaPoly& c) {
      auto& slot = next[key];
      slot += c;
    };
    for (const auto& [key, c] : terms) {
      if (letter == 'a') {
        add({key.creation, key.annihilation + 1}, c);
      } else {
        add({key.creation + 1, key.annihilation}, c);
        if (key.annihilation > 0)
          add({key.creation, key.annihilation - 1}, c * LambdaPoly(static_cast<long>(key.annihilation)));
      }
    }
    terms.clear();
    for (auto& [key, c] : next)
      if (!c.is_zero()) terms.emplace(key, std::move(c));
  }
  NormalForm nf;
  for (const auto& [key, c] : terms) nf.add(key, c);
  return nf;
}

/// Pure string rewriting with the single swap aA -> Aa + 1. Exponential; only
/// for short words.
inline NormalForm normal_order_by_swaps(const std::string& word) {
  std::map<std::string, long> pending{{word, 1}};
  std::map<std::string, long> done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const auto pos = w.find("aA");
    if (pos == std::string::npos) {
      done[w] += node.mapped();
      continue;
    }
    std::string swapped = w;
    swapped[pos] = 'A';
    swapped[pos + 1] = 'a';
    std::string dropped = w.substr(0, pos) + w.substr(pos + 2);
    pending[swapped] += node.mapped();
    pending[dropped] += node.mapped();
  }
  NormalForm nf;
  for (const auto& [w, c] : done) {
    const auto creations = static_cast<unsigned>(std::count(w.begin(), w.end(), 'A'));
    nf.add({creations, static_cast<unsigned>(w.size()) - creations}, LambdaPoly(c));
  }
  return nf;
}

inline std::string word(unsigned creations, unsigned annihilations) {
  return std::string(creations, 'A') + std::string(annihilations, 'a');
}

/// Right-multiplies by every term of `right` one letter at a time.
inline NormalForm multiply_letterwise(const NormalForm& left, const NormalForm& right) {
  NormalForm out;
  for (const auto& [lk, lc] : left.terms())
    for (const auto& [rk, rc] : right.terms()) {
      const NormalForm product =
          normal_order_word(word(lk.creation, lk.annihilation) + word(rk.creation, rk.annihilation));
      for (const auto& [key, c] : product.terms()) out.add(key, c * lc * rc);
    }
  return out;
}

/// Degenerate product assembled with the letterwise oracle, k = 0 leftmost.
inline NormalForm degenerate_product_oracle(unsigned n, unsigned r, unsigned s) {
  const auto factor = [&](unsigned k) {
    NormalForm f = NormalForm::term(r, s);
    f.add({r - s, 0}, LambdaPoly{Rational(0), Rational(-static_cast<long>(k))});
    return f;
  };
  NormalForm product = factor(0);
  for (unsigned k = 1; k < n; ++k) product = multiply_letterwise(product, factor(k));
  return product;
}

/// Small random polynomials for ring-axiom property tests.
class RandomPolys {
 public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return Rational(num(rng_), den(rng_));
  }
  LambdaPoly lambda_poly(unsigned max_degree = 3) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<Rational> c(deg(rng_) + 1);
    for (auto& v : c) v = rational();
    return LambdaPoly(std::move(c));
  }
  XPoly x_poly(unsigned max_degree = 3, unsigned max_lambda_degree = 2) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<LambdaPoly> c(deg(rng_) + 1);
    for (auto& v : c) v = lambda_poly(max_lambda_degree);
    return XPoly(std::move(c));
  }
  NormalForm normal_form(unsigned max_power = 3, unsigned max_terms = 3) {
    std::uniform_int_distribution<unsigned> power(0, max_power);
    std::uniform_int_distribution<unsigned> count(1, max_terms);
    NormalForm nf;
    const unsigned terms = count(rng_);
    for (unsigned t = 0; t < terms; ++t) nf.add({power(rng_), power(rng_)}, lambda_poly(1));
    return nf;
  }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace degen::oracles
