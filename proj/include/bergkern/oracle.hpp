#pragma once

#include <Eigen/Dense>

#include "bergkern/quadrature.hpp"
#include "bergkern/weight.hpp"

namespace bergkern {

// K(0,0) for a two-point weight, from the series
//   K(0,0) = 1 + A_1 + A_2
//          + |a_1 - a_2|^2 * (sum_{j>=1} j C(p_1/2, j) C(p_2/2, j) lambda^j)
//                          / (sum_{j>=0} C(p_1/2, j) C(p_2/2, j) lambda^j),
//   lambda = (1 - |a_1|^2)(1 - |a_2|^2)/|1 - a_1 conj(a_2)|^2 < 1,
// with C the generalized binomial coefficient. Terms are summed until the
// geometric tail bound drops below series_tol.
double hansbo_k00(Complex a1, Complex a2, double p1, double p2,
                  double series_tol = 1e-12);

// Closed-form kernel for a single-factor weight.
Complex closed_form_s1(Complex a, double p, Complex z, Complex zeta);

// Kernel of the polynomial subspace of degree <= N, via the monomial Gram
// matrix G(m,n) = <z^m, z^n>_h and its Cholesky factor. Converges to the
// full kernel from below on the diagonal as N grows.
struct TruncatedKernel {
  WeightSpec spec;
  int N = 0;
  Eigen::MatrixXcd chol_l;  // lower-triangular Cholesky factor of G

  Complex eval(Complex z, Complex zeta) const;

  // Top-left count x count block of G^{-1}; entry (k,j) converges to the
  // scaled origin derivative K^{(k,j)}(0,0)/(k! j!).
  Eigen::MatrixXcd kappa_block(int count) const;
};

TruncatedKernel truncated_kernel(const WeightSpec& spec, int N,
                                 const QuadConfig& cfg);

}  // namespace bergkern
