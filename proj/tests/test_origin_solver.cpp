#include <doctest.h>

#include <cmath>

#include "bergkern/kernel_polys.hpp"
#include "bergkern/oracle.hpp"
#include "bergkern/origin_solver.hpp"
#include "testutil.hpp"

using namespace bergkern;

namespace {

QuadConfig solver_cfg() {
  QuadConfig cfg;
  cfg.abs_tol = 1e-10;
  return cfg;
}

}  // namespace

TEST_CASE("zero exponents reduce to the unweighted kernel derivatives") {
  // h == 1 with any root set: K = 1/(1-z conj(zeta))^2, so
  // K^{(k,j)}(0,0)/(k! j!) = (k+1) delta_{kj}.
  for (int s : {3, 4}) {
    std::vector<WeightFactor> fs;
    const Complex pts[] = {{0.3, 0.0}, {-0.2, 0.4}, {0.1, -0.5}, {-0.45, -0.15}};
    for (int k = 0; k < s; ++k) fs.push_back({pts[k], 0.0});
    WeightSpec spec(fs);
    OriginDerivatives od = solve_origin_derivatives(spec, solver_cfg());
    REQUIRE(od.kappa.rows() == s - 1);
    REQUIRE(od.kappa.cols() == s - 1);
    for (int k = 0; k < s - 1; ++k)
      for (int j = 0; j < s - 1; ++j) {
        const Complex want = (k == j) ? Complex{double(k + 1), 0.0} : Complex{};
        CHECK(std::abs(od.kappa(k, j) - want) < 1e-8);
      }
    CHECK(od.hermitian_residual < 1e-8);
    CHECK(od.gram_condition >= 1.0);
  }
}

TEST_CASE("two-point diagonal matches the binomial series value") {
  struct Case {
    Complex a1, a2;
    double p1, p2;
    double want;  // independently computed high-precision series value
  };
  const Case cases[] = {
      {{0.3, 0.0}, {-0.4, 0.0}, 1.0, 3.0, 2.857669025594236121648506},
      {{0.25, 0.0}, {0.0, -0.35}, 0.7, 1.3, 1.931440886582676885431704},
      {{0.5, 0.0}, {-0.2, 0.0}, -0.5, 2.5, 1.914688917651197371419455},
  };
  for (const Case& c : cases) {
    WeightSpec spec({{c.a1, c.p1}, {c.a2, c.p2}});
    OriginDerivatives od = solve_origin_derivatives(spec, solver_cfg());
    CHECK(std::abs(od.k00() - c.want) < 1e-7);
    CHECK(od.hermitian_residual < 1e-8);
    // The summed series agrees with the same pinned value far more tightly.
    CHECK(std::abs(hansbo_k00(c.a1, c.a2, c.p1, c.p2) - c.want) < 1e-11);
  }
}

TEST_CASE("kappa agrees with the truncated-kernel inverse-Gram block") {
  WeightSpec spec({{Complex{0.3, 0.0}, 1.0}, {Complex{-0.2, 0.4}, 2.0},
                   {Complex{0.1, -0.5}, 0.5}});
  QuadConfig cfg = solver_cfg();
  OriginDerivatives od = solve_origin_derivatives(spec, cfg);
  TruncatedKernel tk = truncated_kernel(spec, 40, cfg);
  Eigen::MatrixXcd block = tk.kappa_block(2);
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(od.kappa(k, j) - block(k, j)) < 1e-4);
}

TEST_CASE("gram matrix entries equal pairwise inner products") {
  WeightSpec spec({{Complex{0.3, 0.0}, 1.0}, {Complex{-0.4, 0.0}, 2.0},
                   {Complex{0.1, 0.45}, 0.8}});
  QuadConfig cfg = solver_cfg();
  Eigen::MatrixXcd g = gram_matrix(spec, cfg);
  REQUIRE(g.rows() == 2);
  REQUIRE(g.cols() == 2);
  PolySystem sys = PolySystem::build(spec.roots());
  for (int n = 0; n < 2; ++n)
    for (int j = 0; j < 2; ++j) {
      const ComplexPoly& tn = sys.T[n];
      const ComplexPoly& tj = sys.T[j];
      const Complex direct = inner_product(
          [&](Complex z) { return tn(z); }, [&](Complex z) { return tj(z); },
          Measure::weighted_over_qstar_sq, spec, cfg);
      CHECK(std::abs(g(n, j) - direct) < 1e-8);
    }
  // Hermitian within the quadrature tolerance, positive diagonal.
  CHECK(std::abs(g(0, 1) - std::conj(g(1, 0))) < 1e-9);
  CHECK(g(0, 0).real() > 0.0);
  CHECK(g(1, 1).real() > 0.0);
}

TEST_CASE("synthetic solves expose conditioning behavior") {
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd rhs(2, 2);
  rhs << Complex{1.0, 0.0}, Complex{0.0, 2.0}, Complex{0.0, -2.0}, Complex{5.0, 0.0};
  OriginDerivatives od = solve_origin_from(id, rhs);
  CHECK(od.s == 3);
  // With an identity Gram, kappa(k, j) = rhs(j, k) before symmetrization and
  // the input above is already Hermitian in that pairing.
  CHECK(std::abs(od.kappa(0, 0) - Complex{1.0, 0.0}) < 1e-14);
  CHECK(std::abs(od.kappa(0, 1) - Complex{0.0, -2.0}) < 1e-14);
  CHECK(std::abs(od.kappa(1, 0) - Complex{0.0, 2.0}) < 1e-14);
  CHECK(od.hermitian_residual < 1e-14);

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  bad(1, 1) = Complex{1e-16, 0.0};
  bool threw = false;
  try {
    solve_origin_from(bad, rhs);
  } catch (const IllConditioned& e) {
    threw = true;
    CHECK(e.condition > 1e12);
  }
  CHECK(threw);

  Eigen::MatrixXcd notpd = Eigen::MatrixXcd::Identity(2, 2);
  notpd(0, 0) = Complex{-1.0, 0.0};
  CHECK_THROWS_AS(solve_origin_from(notpd, rhs), IllConditioned);
}

TEST_CASE("accessors and index checks") {
  WeightSpec spec({{Complex{0.3, 0.0}, 1.0}, {Complex{-0.4, 0.0}, 3.0}});
  OriginDerivatives od = solve_origin_derivatives(spec, solver_cfg());
  CHECK(od.k00() == doctest::Approx(od.kappa(0, 0).real()));
  CHECK(std::abs(od.raw(0, 0) - od.kappa(0, 0)) < 1e-15);
  CHECK_THROWS_AS(od.raw(-1, 0), IndexViolation);
  CHECK_THROWS_AS(od.raw(0, 1), IndexViolation);

  // raw scales by k! j!: s = 4 with zero exponents has kappa = diag(1,2,3)
  // and raw = diag(1, 2, 12).
  WeightSpec spec4({{Complex{0.3, 0.0}, 0.0}, {Complex{-0.2, 0.4}, 0.0},
                    {Complex{0.1, -0.5}, 0.0}, {Complex{-0.45, -0.15}, 0.0}});
  OriginDerivatives od4 = solve_origin_derivatives(spec4, solver_cfg());
  CHECK(std::abs(od4.raw(2, 2) - Complex{12.0, 0.0}) < 1e-7);
  CHECK(std::abs(od4.raw(1, 1) - Complex{2.0, 0.0}) < 1e-8);

  // s = 1: empty kappa, k00 undefined.
  WeightSpec spec1({{Complex{0.3, 0.0}, 1.5}});
  OriginDerivatives od1 = solve_origin_derivatives(spec1, solver_cfg());
  CHECK(od1.s == 1);
  CHECK(od1.kappa.rows() == 0);
  CHECK_THROWS_AS(od1.k00(), IndexViolation);
  CHECK_THROWS_AS(od1.raw(0, 0), IndexViolation);
}
