#pragma once

// Normal ordering in the Weyl algebra generated by the boson operators a and
// a^dagger under [a, a^dagger] = 1, and its differential realization
// a = d/dx, a^dagger = x acting on monomials.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degen/polynomial.hpp"

namespace degen {

/// Key (i, j) stands for the normally ordered word (a^dagger)^i a^j.
struct Ordering {
  unsigned creation = 0;
  unsigned annihilation = 0;
  friend auto operator<=>(const Ordering&, const Ordering&) = default;
};

/// Finite sum of c_ij (a^dagger)^i a^j with nonzero lambda-polynomial coefficients.
class NormalForm {
 public:
  using Terms = std::map<Ordering, LambdaPoly>;

  NormalForm() = default;
  NormalForm(std::initializer_list<std::pair<const Ordering, LambdaPoly>> terms);

  /// c (a^dagger)^i a^j.
  static NormalForm term(unsigned i, unsigned j, LambdaPoly c = LambdaPoly(1L));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LambdaPoly coefficient(unsigned i, unsigned j) const;

  void add(Ordering key, const LambdaPoly& c);

  NormalForm& operator+=(const NormalForm& o);
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b);
  friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  NormalForm evaluate_lambda(const Rational& at) const;

 private:
  Terms terms_;
};

/// Normal form of the operator product left * right.
NormalForm nf_multiply(const NormalForm& left, const NormalForm& right);

/// Factors of the degenerate product are multiplied with the k = 0 factor
/// leftmost and the k = n-1 factor rightmost. The worked (n, r, s) = (2, 4, 2)
/// case pins this direction.
inline constexpr bool kZeroShiftFactorLeftmost = true;

/// (a^dagger)^r a^s - k lambda (a^dagger)^{r-s}.
NormalForm degenerate_factor(unsigned k, unsigned r, unsigned s);

/// Normal form of prod_{k=0}^{n-1} ((a^dagger)^r a^s - k lambda (a^dagger)^{r-s}).
/// Requires r >= s >= 1 and n >= 1 (std::invalid_argument otherwise).
NormalForm degenerate_product(unsigned n, unsigned r, unsigned s);

/// Raised when a normal form does not have the shape the degenerate product
/// guarantees; this indicates an engine defect rather than bad input.
class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reads S^{(r,s)}_lambda(n, k), k = 0..ns, off the diagonal i - j = n(r-s).
std::vector<LambdaPoly> extract_stirling(const NormalForm& nf, unsigned n, unsigned r, unsigned s);

/// Polynomial in x kept as exponent -> lambda-polynomial; no zero entries.
class MonomialImage {
 public:
  using Terms = std::map<unsigned, LambdaPoly>;

  MonomialImage() = default;
  static MonomialImage monomial(unsigned p, LambdaPoly c = LambdaPoly(1L));

  const Terms& terms() const { return terms_; }
  void add(unsigned exponent, const LambdaPoly& c);
  MonomialImage& operator+=(const MonomialImage& o);
  friend bool operator==(const MonomialImage&, const MonomialImage&) = default;

  /// Sum of coefficients, i.e. the value at x = 1.
  LambdaPoly at_one() const;
  XPoly to_xpoly() const;

 private:
  Terms terms_;
};

/// Image of x^p under sum c_ij x^i (d/dx)^j.
MonomialImage apply_to_monomial(const NormalForm& nf, unsigned p);
/// Linear extension of apply_to_monomial.
MonomialImage apply(const NormalForm& nf, const MonomialImage& f);

/// ((-1)^k / k!) [prod_j (x^r D^s - j lambda x^{r-s})] (1 - x)^k at x = 1,
/// with the factors applied one at a time to the polynomial (1 - x)^k.
LambdaPoly differential_extract(unsigned n, unsigned r, unsigned s, unsigned k);

}  // namespace degen
