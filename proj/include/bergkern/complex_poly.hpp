#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "bergkern/errors.hpp"

namespace bergkern {

// Dense univariate polynomial over the complex field, coefficients stored in
// ascending powers. The zero polynomial has an empty coefficient vector and
// degree -1. Exact trailing zeros are stripped on construction.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  ComplexPoly(std::initializer_list<Complex> cs)
      : coeffs_(cs) {
    normalize();
  }
  explicit ComplexPoly(std::vector<Complex> cs) : coeffs_(std::move(cs)) {
    normalize();
  }

  static ComplexPoly one() { return ComplexPoly{Complex(1.0, 0.0)}; }
  static ComplexPoly monomial(int k, Complex c = Complex(1.0, 0.0));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  // Coefficient of z^i; zero outside the stored range.
  Complex coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(i)];
  }

  Complex operator()(Complex z) const;

  ComplexPoly derivative() const;
  ComplexPoly conjugated() const;          // coefficient-wise conjugation
  ComplexPoly truncated(int max_degree) const;
  ComplexPoly shifted(int k) const;        // multiply by z^k, k >= 0

  ComplexPoly& operator+=(const ComplexPoly& rhs);
  ComplexPoly& operator-=(const ComplexPoly& rhs);
  ComplexPoly& operator*=(Complex c);

  friend ComplexPoly operator+(ComplexPoly lhs, const ComplexPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexPoly operator-(ComplexPoly lhs, const ComplexPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexPoly operator*(const ComplexPoly& lhs, const ComplexPoly& rhs);
  friend ComplexPoly operator*(Complex c, ComplexPoly p) {
    p *= c;
    return p;
  }

  // Synthetic division by (z - root). Returns the quotient and the remainder
  // value; the remainder equals the evaluation at the root.
  std::pair<ComplexPoly, Complex> deflated(Complex root) const;

  // Power-series inverse mod z^{order+1}. Requires a nonzero constant term.
  ComplexPoly series_inverse(int order) const;

  // Power-series quotient (*this)/den mod z^{order+1}.
  ComplexPoly series_quotient(const ComplexPoly& den, int order) const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
  }
  std::vector<Complex> coeffs_;
};

// A finite set of pairwise distinct points in the open unit disk. Exact
// coincidence is rejected; pairs closer than min_separation only raise the
// near_coincident flag, since downstream conditioning degrades gradually.
class RootSet {
 public:
  explicit RootSet(std::vector<Complex> roots, double min_separation = 1e-8);

  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<Complex>& roots() const { return roots_; }
  Complex root(int k) const;
  bool near_coincident() const { return near_; }

 private:
  std::vector<Complex> roots_;
  bool near_ = false;
};

// Monic polynomial with the given roots, q(z) = prod (z - a_k).
ComplexPoly from_roots(const RootSet& roots);

// Reversal with degree parameter s: coefficient l of the result equals
// conj(c_{s-l}) where c are the coefficients of q. For monic q of degree s
// this is z^s conj(q(1/conj(z))) = prod (1 - conj(a_k) z).
ComplexPoly reverse(const ComplexPoly& q, int s);

struct Subproduct {
  ComplexPoly q_k;       // prod_{j != k} (z - a_j), monic of degree s-1
  ComplexPoly q_star_k;  // prod_{j != k} (1 - conj(a_j) z)
};

// One subproduct pair per root, computed by synthetic division of q.
std::vector<Subproduct> subproducts(const RootSet& roots);

}  // namespace bergkern
