#include "bergkern/oracle.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <vector>

namespace bergkern {

double hansbo_k00(Complex a1, Complex a2, double p1, double p2,
                  double series_tol) {
  if (!(std::abs(a1) < 1.0) || !(std::abs(a2) < 1.0))
    throw DomainViolation("base point outside the open unit disk");
  if (a1 == a2) throw DistinctnessViolation("coincident base points");
  if (!(p1 > -2.0) || !(p2 > -2.0))
    throw DomainViolation("weight exponent must exceed -2");
  if (!(series_tol > 0.0)) throw DomainViolation("series tolerance must be positive");

  const double alpha1 = 0.5 * p1, alpha2 = 0.5 * p2;
  const double lambda =
      (1.0 - std::norm(a1)) * (1.0 - std::norm(a2)) / std::norm(1.0 - a1 * std::conj(a2));

  double num = 0.0, den = 1.0;  // j = 0 term of the denominator
  double c1 = 1.0, c2 = 1.0, lam_pow = 1.0;
  constexpr long kMaxTerms = 1000000;
  for (long j = 1; j <= kMaxTerms; ++j) {
    c1 *= (alpha1 - (j - 1)) / j;
    c2 *= (alpha2 - (j - 1)) / j;
    lam_pow *= lambda;
    const double term = c1 * c2 * lam_pow;
    num += j * term;
    den += term;
    // binomial factors are bounded for j > max(alpha), so the tail is
    // geometric with ratio lambda
    const double tail = std::abs(term) * (j + 1) * lambda / (1.0 - lambda);
    if (j > 2 + alpha1 + alpha2 && tail < series_tol) break;
    if (j == kMaxTerms)
      throw ToleranceNotMet("two-point series did not converge",
                            Complex(num / den, 0.0), tail);
  }

  const double big_a1 = alpha1 * (1.0 - std::norm(a1));
  const double big_a2 = alpha2 * (1.0 - std::norm(a2));
  return 1.0 + big_a1 + big_a2 + std::norm(a1 - a2) * num / den;
}

Complex closed_form_s1(Complex a, double p, Complex z, Complex zeta) {
  if (!(std::abs(a) < 1.0)) throw DomainViolation("base point outside the open unit disk");
  if (!(p > -2.0)) throw DomainViolation("weight exponent must exceed -2");
  if (!(std::abs(z) < 1.0) || !(std::abs(zeta) < 1.0))
    throw DomainViolation("evaluation point outside the open unit disk");
  const double big_a = 0.5 * p * (1.0 - std::norm(a));
  const Complex w = std::conj(zeta);
  const Complex dzw = 1.0 - z * w;
  Complex k = 1.0 / (dzw * dzw);
  k += big_a / (dzw * (1.0 - z * std::conj(a)) * (1.0 - a * w));
  return k;
}

Complex TruncatedKernel::eval(Complex z, Complex zeta) const {
  if (!(std::abs(z) < 1.0) || !(std::abs(zeta) < 1.0))
    throw DomainViolation("evaluation point outside the open unit disk");
  // The columns of L^{-T} orthonormalize the monomials, so with
  // phi(z) = L^{-1} v(z), v(z) = (1, z, ..., z^N), the kernel is
  // sum_i phi_i(z) conj(phi_i(zeta)).
  const int n = N + 1;
  Eigen::VectorXcd vz(n), vzeta(n);
  Complex pz{1.0, 0.0}, pzeta{1.0, 0.0};
  for (int i = 0; i < n; ++i) {
    vz(i) = pz;
    vzeta(i) = pzeta;
    pz *= z;
    pzeta *= zeta;
  }
  const auto lower = chol_l.triangularView<Eigen::Lower>();
  const Eigen::VectorXcd x = lower.solve(vz);
  const Eigen::VectorXcd y = lower.solve(vzeta);
  return y.dot(x);  // conj(y)^T x
}

Eigen::MatrixXcd TruncatedKernel::kappa_block(int count) const {
  if (count < 0 || count > N + 1)
    throw IndexViolation("block size exceeds the truncation order");
  const int n = N + 1;
  const auto lower = chol_l.triangularView<Eigen::Lower>();
  const Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(n, n).leftCols(count);
  const Eigen::MatrixXcd x = lower.solve(e);
  const Eigen::MatrixXcd ginv_cols = lower.adjoint().solve(x);
  // coefficient of z^k conj(zeta)^j in the truncated kernel is (G^{-1})_{jk}
  return ginv_cols.topRows(count).transpose().eval();
}

TruncatedKernel truncated_kernel(const WeightSpec& spec, int N,
                                 const QuadConfig& cfg) {
  if (N < 0) throw IndexViolation("truncation order must be nonnegative");

  // The Gram integrands carry harmonics up to e^{i N theta} and radial
  // powers up to r^{2N}, so the base orders scale with N and the tolerance
  // is tightened below the caller's target.
  QuadConfig tight = cfg;
  tight.abs_tol = cfg.abs_tol / 100.0;
  tight.max_depth = std::max(cfg.max_depth, 20);
  tight.radial_order = std::max(cfg.radial_order, std::min(32, 8 + N / 4));
  tight.angular_order = std::max(cfg.angular_order, std::min(32, 8 + N / 2));

  const int n = N + 1;
  const int dim = n * (n + 1) / 2;  // lower triangle (m >= j)
  std::vector<Complex> powers(static_cast<std::size_t>(n));
  BatchIntegrand f = [&](Complex z, std::span<Complex> out) {
    Complex pz{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      powers[static_cast<std::size_t>(i)] = pz;
      pz *= z;
    }
    std::size_t idx = 0;
    for (int m = 0; m < n; ++m)
      for (int j = 0; j <= m; ++j)
        out[idx++] = powers[static_cast<std::size_t>(m)] *
                     std::conj(powers[static_cast<std::size_t>(j)]);
  };

  const BatchResult res = integrate_disk_batch(dim, f, &spec, {}, tight);

  Eigen::MatrixXcd gram(n, n);
  std::size_t idx = 0;
  for (int m = 0; m < n; ++m) {
    for (int j = 0; j <= m; ++j) {
      gram(m, j) = res.values[idx];
      gram(j, m) = std::conj(res.values[idx]);
      ++idx;
    }
  }

  Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success)
    throw IllConditioned("monomial Gram matrix is not numerically positive definite",
                         std::numeric_limits<double>::infinity());
  TruncatedKernel out;
  out.spec = spec;
  out.N = N;
  out.chol_l = llt.matrixL();
  return out;
}

}  // namespace bergkern
