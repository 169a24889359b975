#include "bergkern/origin_solver.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <vector>

#include "bergkern/kernel_polys.hpp"

namespace bergkern {

namespace {

constexpr double kCondLimit = 1e12;

struct Assembled {
  Eigen::MatrixXcd gram;  // symmetrized
  Eigen::MatrixXcd rhs;   // I - V, column k is the right-hand side for row k
  double gram_herm_residual = 0.0;
};

// One shared adaptive mesh integrates every Gram entry and every <T_n, P_k>
// at once. The full Gram matrix is computed (not just a triangle) so its
// Hermitian deviation is a real quadrature diagnostic before symmetrizing.
Assembled assemble_system(const WeightSpec& spec, const QuadConfig& cfg) {
  const int m = spec.size() - 1;
  Assembled out;
  out.gram.resize(std::max(m, 0), std::max(m, 0));
  out.rhs.resize(std::max(m, 0), std::max(m, 0));
  if (m <= 0) return out;

  const PolySystem sys = PolySystem::build(spec.roots());
  std::vector<ComplexPoly> P;
  P.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) P.push_back(build_P(sys, spec, k));

  const int dim = 2 * m * m;
  std::vector<Complex> tvals(static_cast<std::size_t>(m));
  std::vector<Complex> pvals(static_cast<std::size_t>(m));
  BatchIntegrand f = [&](Complex z, std::span<Complex> vals) {
    const double minv = 1.0 / std::norm(sys.q_star(z));
    for (int n = 0; n < m; ++n) tvals[static_cast<std::size_t>(n)] = sys.T[static_cast<std::size_t>(n)](z);
    for (int k = 0; k < m; ++k) pvals[static_cast<std::size_t>(k)] = P[static_cast<std::size_t>(k)](z);
    for (int n = 0; n < m; ++n) {
      const Complex tn = tvals[static_cast<std::size_t>(n)] * minv;
      for (int j = 0; j < m; ++j)
        vals[static_cast<std::size_t>(n * m + j)] = tn * std::conj(tvals[static_cast<std::size_t>(j)]);
      for (int k = 0; k < m; ++k)
        vals[static_cast<std::size_t>(m * m + n * m + k)] = tn * std::conj(pvals[static_cast<std::size_t>(k)]);
    }
  };

  const BatchResult res = integrate_disk_batch(dim, f, &spec, {}, cfg);

  Eigen::MatrixXcd raw(m, m), v(m, m);
  for (int n = 0; n < m; ++n) {
    for (int j = 0; j < m; ++j) raw(n, j) = res.values[static_cast<std::size_t>(n * m + j)];
    for (int k = 0; k < m; ++k) v(n, k) = res.values[static_cast<std::size_t>(m * m + n * m + k)];
  }
  out.gram_herm_residual = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  out.gram = 0.5 * (raw + raw.adjoint());
  out.rhs = Eigen::MatrixXcd::Identity(m, m) - v;
  return out;
}

}  // namespace

Complex OriginDerivatives::raw(int k, int j) const {
  if (s < 2 || k < 0 || j < 0 || k > s - 2 || j > s - 2)
    throw IndexViolation("origin derivative index out of range");
  double fk = 1.0, fj = 1.0;
  for (int i = 2; i <= k; ++i) fk *= i;
  for (int i = 2; i <= j; ++i) fj *= i;
  return kappa(k, j) * fk * fj;
}

double OriginDerivatives::k00() const {
  if (s < 2) throw IndexViolation("k00 requires at least two weight factors");
  return kappa(0, 0).real();
}

Eigen::MatrixXcd gram_matrix(const WeightSpec& spec, const QuadConfig& cfg) {
  return assemble_system(spec, cfg).gram;
}

Eigen::VectorXcd rhs_vector(const WeightSpec& spec, int k, const QuadConfig& cfg) {
  const int m = spec.size() - 1;
  if (k < 0 || k >= m) throw IndexViolation("right-hand side index out of range");
  return assemble_system(spec, cfg).rhs.col(k);
}

OriginDerivatives solve_origin_from(const Eigen::MatrixXcd& gram,
                                    const Eigen::MatrixXcd& rhs) {
  const int m = static_cast<int>(gram.rows());
  OriginDerivatives out;
  out.s = m + 1;
  out.kappa.resize(m, m);
  if (m == 0) return out;
  if (gram.cols() != m || rhs.rows() != m || rhs.cols() != m)
    throw DomainViolation("gram and right-hand side shapes disagree");

  const Eigen::MatrixXcd g = 0.5 * (gram + gram.adjoint());
  Eigen::MatrixXcd x(m, m);

  Eigen::LLT<Eigen::MatrixXcd> llt(g);
  if (llt.info() == Eigen::Success) {
    const Eigen::VectorXd d = llt.matrixLLT().diagonal().real();
    const double ratio = d.maxCoeff() / d.minCoeff();
    out.gram_condition = ratio * ratio;
    if (!(out.gram_condition < kCondLimit))
      throw IllConditioned("gram matrix condition exceeds 1e12", out.gram_condition);
    x = llt.solve(rhs);
  } else {
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(g);
    if (ldlt.info() != Eigen::Success)
      throw IllConditioned("gram factorization failed",
                           std::numeric_limits<double>::infinity());
    const Eigen::VectorXd d = ldlt.vectorD().real();
    if (d.minCoeff() <= 0.0)
      throw IllConditioned("gram matrix is not positive definite",
                           std::numeric_limits<double>::infinity());
    out.gram_condition = d.maxCoeff() / d.minCoeff();
    if (!(out.gram_condition < kCondLimit))
      throw IllConditioned("gram matrix condition exceeds 1e12", out.gram_condition);
    x = ldlt.solve(rhs);
  }

  // row k of kappa solves against rhs column k
  const Eigen::MatrixXcd kt = x.transpose();
  out.hermitian_residual = (kt - kt.adjoint()).cwiseAbs().maxCoeff();
  out.kappa = 0.5 * (kt + kt.adjoint());
  if (!(out.kappa(0, 0).real() > 0.0))
    throw IllConditioned("kernel value at the origin is not positive",
                         out.gram_condition);
  return out;
}

OriginDerivatives solve_origin_derivatives(const WeightSpec& spec,
                                           const QuadConfig& cfg) {
  const Assembled sys = assemble_system(spec, cfg);
  OriginDerivatives out = solve_origin_from(sys.gram, sys.rhs);
  out.s = std::max(spec.size(), 1);
  return out;
}

}  // namespace bergkern
