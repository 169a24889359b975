#pragma once

#include <vector>

#include "bergkern/complex_poly.hpp"
#include "bergkern/errors.hpp"

namespace bergkern {

struct WeightFactor {
  Complex a;  // |a| < 1
  double p;   // p > -2
};

// Radial-limit weight h(z) = prod_k |(z - a_k)/(1 - conj(a_k) z)|^{p_k} on
// the open unit disk. Factors carry pairwise distinct base points.
class WeightSpec {
 public:
  WeightSpec() = default;  // empty product, h == 1
  explicit WeightSpec(std::vector<WeightFactor> factors,
                      double min_separation = 1e-8);

  int size() const { return static_cast<int>(factors_.size()); }
  const std::vector<WeightFactor>& factors() const { return factors_; }
  const WeightFactor& factor(int k) const;

  // A_k = (p_k/2) (1 - |a_k|^2).
  double A(int k) const;

  bool all_zero_exponents() const;
  bool near_coincident() const { return near_; }

  RootSet roots() const;

 private:
  std::vector<WeightFactor> factors_;
  bool near_ = false;
};

// h(z). Throws DomainViolation for |z| >= 1. At z == a_k the value is 0 for
// p_k > 0 and +infinity for p_k < 0; quadrature nodes never land there.
double weight_eval(const WeightSpec& spec, Complex z);

// h(z) with the |z - a_k|^{p_k} part of factor k divided out:
// h(z) = |z - a_k|^{p_k} * weight_eval_excluding(spec, k, z).
// Finite and smooth in a neighborhood of a_k.
double weight_eval_excluding(const WeightSpec& spec, int k, Complex z);

}  // namespace bergkern
