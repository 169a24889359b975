#pragma once

#include <Eigen/Dense>

#include "bergkern/quadrature.hpp"
#include "bergkern/weight.hpp"

namespace bergkern {

// Scaled origin derivatives of the reproducing kernel:
// kappa(k, j) = K^{(k,j)}(0,0) / (k! j!), 0 <= k, j <= s-2. For s = 1 the
// matrix is empty. kappa is Hermitian; hermitian_residual records how far
// the unsymmetrized solve was from Hermitian before averaging, a genuine
// consistency indicator since symmetry is never imposed on the system.
struct OriginDerivatives {
  int s = 1;
  Eigen::MatrixXcd kappa;
  double hermitian_residual = 0.0;
  double gram_condition = 1.0;

  // Unscaled derivative K^{(k,j)}(0,0) = kappa(k,j) k! j!.
  Complex raw(int k, int j) const;
  // K(0,0) = kappa(0,0); requires s >= 2.
  double k00() const;
};

// Gram matrix G(n, j) = <T_n, T_j> in the inner product
// <f, g> = integral of f conj(g) |q*|^{-2} h dsigma. Size (s-1) x (s-1).
Eigen::MatrixXcd gram_matrix(const WeightSpec& spec, const QuadConfig& cfg);

// Right-hand side for row k: entry n is delta_{n,k} - <T_n, P_k>.
Eigen::VectorXcd rhs_vector(const WeightSpec& spec, int k, const QuadConfig& cfg);

// Pure linear-algebra step: solves G x_k = rhs_k for every k and assembles
// kappa(k, j) = x_k(j). Exposed separately so conditioning behavior can be
// exercised with synthetic matrices. rhs columns are indexed by k.
OriginDerivatives solve_origin_from(const Eigen::MatrixXcd& gram,
                                    const Eigen::MatrixXcd& rhs);

// Full pipeline: assembles the Gram matrix and all right-hand sides with one
// shared adaptive mesh, then solves.
OriginDerivatives solve_origin_derivatives(const WeightSpec& spec,
                                           const QuadConfig& cfg);

}  // namespace bergkern
