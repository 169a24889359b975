#pragma once

#include <vector>

#include "bergkern/complex_poly.hpp"
#include "bergkern/weight.hpp"

namespace bergkern {

// T_k(z) = z^k sum_{l=0}^{s-2-k} conj(c_{s-l}) z^l, for 0 <= k <= s-2, where
// c are the coefficients of the monic root polynomial q of degree s. The sum
// is exactly the truncation of q* to degree s-2-k. deg T_k <= s-2 and
// T_{s-2}(z) = z^{s-2}. These satisfy [T_k/q*]^{(l)}(0) = delta_{kl} k! for
// 0 <= l <= s-2.
ComplexPoly build_T(const ComplexPoly& q_star, int s, int k);

// Positive-semidefinite separable form
//   L_k(z, zeta) = sum_{r=0}^{s-2} F_{k,r}(z) conj(F_{k,r}(zeta)),
//   F_{k,r}(z) = z^r sum_{l=0}^{s-2-r} conj(c_{k,s-1-l}) z^l,
// where c_{k,.} are the coefficients of the subproduct q_k. Each F_{k,r} is
// z^r times the truncation of q*_k to degree s-2-r. For s = 1 the form is
// empty and evaluates to zero.
class LEvaluator {
 public:
  LEvaluator() = default;
  explicit LEvaluator(std::vector<ComplexPoly> factors)
      : factors_(std::move(factors)) {}

  Complex operator()(Complex z, Complex zeta) const;
  const std::vector<ComplexPoly>& factors() const { return factors_; }

 private:
  std::vector<ComplexPoly> factors_;
};

LEvaluator build_L(const ComplexPoly& q_star_k, int s, int k);

// Everything derived from a root set that the kernel formulas reuse.
struct PolySystem {
  int s = 0;
  std::vector<Complex> roots;
  ComplexPoly q;        // monic, degree s
  ComplexPoly q_star;   // reversal of q
  std::vector<Subproduct> subs;   // size s (empty for s = 0)
  std::vector<ComplexPoly> T;     // T_0 .. T_{s-2}
  std::vector<LEvaluator> L;      // L_1 .. L_s, stored 0-based

  static PolySystem build(const RootSet& roots);
};

// P_n(zeta) for 0 <= n <= s-2, defined through its conjugate
//   conj(P_n(zeta)) = (n+1) q(0) w^{s+n} + w^{s-1} sum_{j=0}^{n} b_{n,j} w^j,
//   w = conj(zeta),
//   b_{n,j} = (n+1) c_{n+1-j}
//           + sum_k A_k sum_{r=0}^{n-j} conj(a_k)^r c_{k,n-j-r}.
// The weight supplies the A_k; its base points must match the system roots.
ComplexPoly build_P(const PolySystem& sys, const WeightSpec& spec, int n);

// Finite Blaschke product B(z) = prod_k (z - a_k)/(1 - conj(a_k) z),
// evaluated factor by factor.
Complex blaschke_eval(const std::vector<Complex>& roots, Complex z);

// B_k: the product with factor k left out.
Complex sub_blaschke_eval(const std::vector<Complex>& roots, int k, Complex z);

}  // namespace bergkern
