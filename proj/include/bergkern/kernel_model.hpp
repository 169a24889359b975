#pragma once

#include <Eigen/Dense>
#include <memory>
#include <mutex>
#include <vector>

#include "bergkern/kernel_polys.hpp"
#include "bergkern/origin_solver.hpp"
#include "bergkern/quadrature.hpp"
#include "bergkern/weight.hpp"

namespace bergkern {

// Reproducing kernel of the weighted Bergman space for
// h = prod_k |(z - a_k)/(1 - conj(a_k) z)|^{p_k}. Immutable once built; the
// two derived matrices are computed on first use and shared between copies.
struct KernelModel {
  WeightSpec spec;
  PolySystem polys;
  std::vector<double> A;       // A_k = (p_k/2)(1 - |a_k|^2)
  OriginDerivatives origin;

  int s() const { return polys.s; }

  // Coupling matrix d of the rational representation, defined by
  // J(z, zeta) = sum_{k,j} d(k,j) q*_k(z) conj(q*_j(zeta)) and computed by
  // matching monomial coefficients against the q*_k basis. Hermitian, s x s.
  const Eigen::MatrixXcd& d_matrix() const;

  // K(a_k, a_j) evaluated with the additive representation, Hermitized.
  const Eigen::MatrixXcd& kernel_at_roots() const;

 private:
  struct Caches {
    std::once_flag d_once, roots_once;
    Eigen::MatrixXcd d, k_roots;
  };
  mutable std::shared_ptr<Caches> caches_ = std::make_shared<Caches>();
};

// Solves for the origin derivatives and assembles everything the three
// kernel representations need. Derived caches start empty.
KernelModel build_model(const WeightSpec& spec, const QuadConfig& cfg);

// Polynomial correction J(z, zeta); identically zero for s <= 1.
Complex eval_J(const KernelModel& model, Complex z, Complex zeta);

// Additive representation:
//   K = 1/(1 - z conj(zeta))^2
//     + sum_k A_k / ((1 - z conj(zeta))(1 - z conj(a_k))(1 - a_k conj(zeta)))
//     + J(z, zeta) / (q*(z) conj(q*(zeta))).
Complex eval_main(const KernelModel& model, Complex z, Complex zeta);

// Rational representation with the J term expanded over the q*_k basis:
// the last term becomes sum_{k,j} d(k,j)/((1 - z conj(a_k))(1 - a_j conj(zeta))).
Complex eval_canonical(const KernelModel& model, Complex z, Complex zeta);

// Blaschke-product representation built from the sub-products B_k and the
// kernel values at the root pairs.
Complex eval_mgs(const KernelModel& model, Complex z, Complex zeta);

// Closed form of K(z, 0).
Complex eval_at_zero(const KernelModel& model, Complex z);

// K^{(k,0)}(0, zeta): k-th z-derivative of the kernel at z = 0, 0 <= k <= s-2.
Complex eval_origin_z_derivative(const KernelModel& model, int k, Complex zeta);

}  // namespace bergkern
