#include <doctest.h>

#include <cmath>
#include <vector>

#include "bergkern/kernel_model.hpp"
#include "bergkern/oracle.hpp"
#include "testutil.hpp"

using namespace bergkern;

namespace {

QuadConfig model_cfg() {
  QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  return cfg;
}

WeightSpec spec3() {
  return WeightSpec({{Complex{0.3, 0.0}, 1.0}, {Complex{-0.2, 0.4}, 2.0},
                     {Complex{0.1, -0.5}, 0.5}});
}

const std::vector<Complex>& sample_points() {
  static const std::vector<Complex> pts = {
      {0.4, 0.2}, {-0.3, 0.1}, {0.55, -0.35}, {-0.5, -0.5}, {0.0, 0.0}, {0.1, 0.62}};
  return pts;
}

}  // namespace

TEST_CASE("kernel is Hermitian and positive on the diagonal") {
  KernelModel m = build_model(spec3(), model_cfg());
  for (Complex z : sample_points())
    for (Complex zeta : sample_points()) {
      const Complex kzz = eval_main(m, z, zeta);
      const Complex kswap = eval_main(m, zeta, z);
      CHECK(std::abs(kzz - std::conj(kswap)) < 1e-13);
    }
  for (Complex z : sample_points()) {
    const Complex diag = eval_main(m, z, z);
    CHECK(std::abs(diag.imag()) < 1e-13);
    CHECK(diag.real() > 0.0);
  }
}

TEST_CASE("sampled kernel matrix is positive semidefinite") {
  KernelModel m = build_model(spec3(), model_cfg());
  const auto& pts = sample_points();
  const int n = static_cast<int>(pts.size());
  Eigen::MatrixXcd k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k(i, j) = eval_main(m, pts[i], pts[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (k + k.adjoint()));
  CHECK(es.eigenvalues().minCoeff() > -1e-8 * es.eigenvalues().maxCoeff());
}

TEST_CASE("the three representations agree pointwise") {
  KernelModel m = build_model(spec3(), model_cfg());
  for (Complex z : sample_points())
    for (Complex zeta : sample_points()) {
      const Complex a = eval_main(m, z, zeta);
      const Complex b = eval_canonical(m, z, zeta);
      const Complex c = eval_mgs(m, z, zeta);
      CHECK(std::abs(a - b) < 1e-9);
      CHECK(std::abs(a - c) < 1e-9);
    }
}

TEST_CASE("rotating the weight rotates the kernel arguments") {
  QuadConfig cfg = model_cfg();
  WeightSpec spec = spec3();
  KernelModel m = build_model(spec, cfg);
  const Complex rot = std::polar(1.0, 1.234567);
  std::vector<WeightFactor> fs;
  for (const auto& w : spec.factors()) fs.push_back({w.a / rot, w.p});
  KernelModel mr = build_model(WeightSpec(fs), cfg);
  for (Complex z : sample_points()) {
    const Complex zeta = sample_points()[2];
    CHECK(std::abs(eval_main(mr, z, zeta) - eval_main(m, rot * z, rot * zeta)) < 1e-7);
  }
}

TEST_CASE("kernel reproduces monomials") {
  QuadConfig cfg = model_cfg();
  WeightSpec spec = spec3();
  KernelModel m = build_model(spec, cfg);
  const Complex zs[] = {{0.4, 0.2}, {-0.3, 0.1}};
  for (Complex z : zs)
    for (int mm = 0; mm <= 2; ++mm) {
      const Complex got = integrate_disk(
          [&](Complex zeta) {
            Complex f{1.0, 0.0};
            for (int i = 0; i < mm; ++i) f *= zeta;
            return f * eval_main(m, z, zeta);
          },
          &spec, cfg);
      Complex want{1.0, 0.0};
      for (int i = 0; i < mm; ++i) want *= z;
      CHECK(std::abs(got - want) < 1e-6);
    }
}

TEST_CASE("origin derivative sections pick out Taylor coefficients") {
  // integral of zeta^m * K^{(k,0)}(0, zeta) h dsigma = m! delta_{mk}.
  QuadConfig cfg = model_cfg();
  WeightSpec spec = spec3();
  KernelModel m = build_model(spec, cfg);
  for (int k = 0; k <= 1; ++k)
    for (int mm = 0; mm <= 2; ++mm) {
      const Complex got = integrate_disk(
          [&](Complex zeta) {
            Complex f{1.0, 0.0};
            for (int i = 0; i < mm; ++i) f *= zeta;
            return f * eval_origin_z_derivative(m, k, zeta);
          },
          &spec, cfg);
      double want = 0.0;
      if (mm == k) {
        want = 1.0;
        for (int i = 2; i <= mm; ++i) want *= i;
      }
      CHECK(std::abs(got - Complex{want, 0.0}) < 1e-6);
    }
  CHECK_THROWS_AS(eval_origin_z_derivative(m, -1, Complex{}), IndexViolation);
  CHECK_THROWS_AS(eval_origin_z_derivative(m, 2, Complex{}), IndexViolation);
}

TEST_CASE("closed form at zeta = 0 matches the additive representation") {
  QuadConfig cfg = model_cfg();
  for (const WeightSpec& spec :
       {spec3(), WeightSpec({{Complex{}, 1.5}, {Complex{-0.2, 0.4}, 2.0}})}) {
    KernelModel m = build_model(spec, cfg);
    for (Complex z : sample_points()) CHECK(std::abs(eval_at_zero(m, z) - eval_main(m, z, Complex{})) < 1e-12);
  }
}

TEST_CASE("coupling matrix matches residues of J at the reflected points") {
  // d(k,j) = J(1/conj(a_k), 1/conj(a_j)) / (q*_k(1/conj(a_k)) conj(q*_j(1/conj(a_j)))).
  QuadConfig cfg = model_cfg();
  WeightSpec spec = spec3();
  KernelModel m = build_model(spec, cfg);
  const Eigen::MatrixXcd& d = m.d_matrix();
  REQUIRE(d.rows() == 3);
  CHECK((d - d.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) {
      const Complex pk = 1.0 / std::conj(spec.factor(k).a);
      const Complex pj = 1.0 / std::conj(spec.factor(j).a);
      const Complex denom =
          m.polys.subs[static_cast<std::size_t>(k)].q_star_k(pk) *
          std::conj(m.polys.subs[static_cast<std::size_t>(j)].q_star_k(pj));
      const Complex want = eval_J(m, pk, pj) / denom;
      CHECK(std::abs(d(k, j) - want) < 1e-9);
    }
}

TEST_CASE("kernel values at the roots match direct evaluation") {
  KernelModel m = build_model(spec3(), model_cfg());
  const Eigen::MatrixXcd& kr = m.kernel_at_roots();
  REQUIRE(kr.rows() == 3);
  CHECK((kr - kr.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(kr(k, j) - eval_main(m, m.spec.factor(k).a, m.spec.factor(j).a)) < 1e-10);
}

TEST_CASE("a base point at the origin is handled") {
  QuadConfig cfg = model_cfg();
  WeightSpec spec({{Complex{}, 1.0}, {Complex{-0.2, 0.4}, 2.0}, {Complex{0.45, 0.1}, 0.5}});
  KernelModel m = build_model(spec, cfg);
  for (Complex z : sample_points())
    for (Complex zeta : sample_points()) {
      const Complex a = eval_main(m, z, zeta);
      CHECK(std::abs(a - eval_canonical(m, z, zeta)) < 1e-9);
      CHECK(std::abs(a - eval_mgs(m, z, zeta)) < 1e-9);
    }
  const Complex z{0.4, 0.2};
  const Complex got = integrate_disk(
      [&](Complex zeta) { return zeta * eval_main(m, z, zeta); }, &spec, cfg);
  CHECK(std::abs(got - z) < 1e-6);
}

TEST_CASE("single-factor model is rational with no correction term") {
  QuadConfig cfg = model_cfg();
  WeightSpec spec({{Complex{0.3, -0.2}, 1.7}});
  KernelModel m = build_model(spec, cfg);
  for (Complex z : sample_points())
    for (Complex zeta : sample_points()) {
      CHECK(std::abs(eval_J(m, z, zeta)) == 0.0);
      CHECK(std::abs(eval_main(m, z, zeta) -
                     closed_form_s1(spec.factor(0).a, spec.factor(0).p, z, zeta)) < 1e-13);
    }
}

TEST_CASE("evaluation outside the closed disk is rejected") {
  KernelModel m = build_model(spec3(), model_cfg());
  CHECK_THROWS_AS(eval_main(m, Complex{1.01, 0.0}, Complex{}), DomainViolation);
  CHECK_THROWS_AS(eval_main(m, Complex{}, Complex{0.0, -1.2}), DomainViolation);
  CHECK_THROWS_AS(eval_canonical(m, Complex{1.5, 0.0}, Complex{}), DomainViolation);
  CHECK_THROWS_AS(eval_mgs(m, Complex{1.5, 0.0}, Complex{}), DomainViolation);
  CHECK_THROWS_AS(eval_at_zero(m, Complex{-2.0, 0.0}), DomainViolation);
}
