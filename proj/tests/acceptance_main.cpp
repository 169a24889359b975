#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bergkern/complex_poly.hpp"
#include "bergkern/divisor.hpp"
#include "bergkern/kernel_model.hpp"
#include "bergkern/oracle.hpp"
#include "bergkern/quadrature.hpp"
#include "bergkern/weight.hpp"

using namespace bergkern;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  char b[32];
  std::snprintf(b, sizeof(b), "%.2e", v);
  return b;
}

double fact(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Complex draw_in_disk(std::mt19937& rng, double radius, double min_mod = 0.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  for (;;) {
    const Complex z(u(rng), u(rng));
    const double r = std::abs(z);
    if (r <= radius && r >= min_mod) return z;
  }
}

std::vector<Complex> draw_roots(std::mt19937& rng, int s, double radius,
                                double min_sep, double min_mod) {
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < s) {
    const Complex c = draw_in_disk(rng, radius, min_mod);
    bool ok = true;
    for (const Complex& r : roots) ok = ok && std::abs(c - r) > min_sep;
    if (ok) roots.push_back(c);
  }
  return roots;
}

std::vector<Complex> grid_points(double scale) {
  return {Complex(-1.0, 0.0) * scale, Complex(-0.42, 0.50) * scale,
          Complex(0.0, 0.0), Complex(0.58, -0.33) * scale,
          Complex(0.92, 0.25) * scale};
}

double max_pairwise_rep_dev(const KernelModel& m, const std::vector<Complex>& pts) {
  double dev = 0.0;
  for (const Complex z : pts)
    for (const Complex zeta : pts) {
      const Complex a = eval_main(m, z, zeta);
      const Complex b = eval_canonical(m, z, zeta);
      const Complex c = eval_mgs(m, z, zeta);
      dev = std::max({dev, std::abs(a - b), std::abs(a - c), std::abs(b - c)});
    }
  return dev;
}

double at_zero_dev(const KernelModel& m) {
  double dev = 0.0;
  for (int j = 0; j < 20; ++j) {
    const Complex z = std::polar(0.04 * (j + 1), std::numbers::pi * j / 10.0);
    dev = std::max(dev, std::abs(eval_at_zero(m, z) - eval_main(m, z, Complex{})));
  }
  return dev;
}

// max_m |integral of zeta^m K(z0, zeta) h dsigma - z0^m|, m = 0..4.
double reproducing_dev(const KernelModel& m) {
  QuadConfig cfg;
  cfg.abs_tol = 1e-8;
  const Complex z0(0.4, 0.2);
  const BatchResult res = integrate_disk_batch(
      5,
      [&](Complex zeta, std::span<Complex> out) {
        const Complex k = eval_main(m, z0, zeta);
        Complex pw(1.0, 0.0);
        for (int deg = 0; deg < 5; ++deg) {
          out[static_cast<std::size_t>(deg)] = pw * k;
          pw *= zeta;
        }
      },
      &m.spec, {}, cfg);
  double dev = 0.0;
  Complex pw(1.0, 0.0);
  for (int deg = 0; deg < 5; ++deg) {
    dev = std::max(dev, std::abs(res.values[static_cast<std::size_t>(deg)] - pw));
    pw *= z0;
  }
  return dev;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

}  // namespace

int main() {
  int failed = 0;
  std::vector<double> herm;  // pre-symmetrization residuals of every model built
  std::optional<KernelModel> shared;  // three-factor model reused by 5 and 6

  const auto run = [&](int idx, const char* name,
                       const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::printf("%s  criterion %2d  %-26s  %s  [%.1fs]\n",
                o.pass ? "PASS" : "FAIL", idx, name, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };

  run(1, "unweighted reduction", [&]() -> Outcome {
    const auto t0 = Clock::now();
    const WeightSpec spec({{Complex(0.3, 0.0), 0.0},
                           {Complex(-0.2, 0.4), 0.0},
                           {Complex(0.1, -0.5), 0.0}});
    const KernelModel m = build_model(spec, QuadConfig{});
    herm.push_back(m.origin.hermitian_residual);
    double dev = 0.0;
    for (const Complex z : grid_points(0.6))
      for (const Complex zeta : grid_points(0.6)) {
        const Complex w = Complex(1.0, 0.0) - z * std::conj(zeta);
        dev = std::max(dev, std::abs(eval_main(m, z, zeta) - 1.0 / (w * w)));
      }
    double raw_dev = 0.0;
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j) {
        const double want = k == j ? (k + 1.0) * fact(k) * fact(k) : 0.0;
        raw_dev = std::max(raw_dev, std::abs(m.origin.raw(k, j) - want));
      }
    const bool in_time = seconds_since(t0) < 60.0;
    return {dev < 1e-8 && raw_dev < 1e-8 && in_time,
            "kernel dev " + num(dev) + ", origin dev " + num(raw_dev) +
                " (tol 1e-08 each)"};
  });

  run(2, "single-factor exactness", [&]() -> Outcome {
    std::mt19937 rng(20260817u);
    std::uniform_real_distribution<double> up(-1.5, 6.0);
    double dev = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Complex a = draw_in_disk(rng, 0.85);
      const double p = up(rng);
      const Complex z = draw_in_disk(rng, 0.8);
      const Complex zeta = draw_in_disk(rng, 0.8);
      const WeightSpec spec({{a, p}});
      const KernelModel m = build_model(spec, QuadConfig{});
      herm.push_back(m.origin.hermitian_residual);
      dev = std::max(dev,
                     std::abs(eval_main(m, z, zeta) - closed_form_s1(a, p, z, zeta)));
    }
    return {dev < 1e-14, "closed-form dev " + num(dev) + " over 20 draws (tol 1e-14)"};
  });

  run(3, "two-point origin value", [&]() -> Outcome {
    const auto t0 = Clock::now();
    const WeightSpec spec({{Complex(0.3, 0.0), 1.0}, {Complex(-0.4, 0.0), 3.0}});
    const KernelModel m = build_model(spec, QuadConfig{});
    herm.push_back(m.origin.hermitian_residual);
    const double series = hansbo_k00(Complex(0.3, 0.0), Complex(-0.4, 0.0), 1.0, 3.0);
    const double frozen = 2.857669025594236;
    const double dev = std::abs(m.origin.k00() - series);
    const double pin = std::abs(series - frozen);
    const bool in_time = seconds_since(t0) < 30.0;
    return {dev < 1e-7 && pin < 1e-11 && in_time,
            "solver vs series " + num(dev) + " (tol 1e-07), series pin " + num(pin)};
  });

  run(4, "representation equivalence", [&]() -> Outcome {
    std::mt19937 rng(73001u);
    const std::vector<Complex> roots = draw_roots(rng, 3, 0.6, 0.2, 0.15);
    const WeightSpec spec({{roots[0], 1.0}, {roots[1], 2.0}, {roots[2], 0.5}});
    shared.emplace(build_model(spec, QuadConfig{}));
    herm.push_back(shared->origin.hermitian_residual);
    const double dev = max_pairwise_rep_dev(*shared, grid_points(0.6));
    const double zdev = at_zero_dev(*shared);
    return {dev < 1e-9 && zdev < 1e-12,
            "pairwise dev " + num(dev) + " (tol 1e-09), origin section dev " +
                num(zdev) + " (tol 1e-12)"};
  });

  run(5, "truncated-basis agreement", [&]() -> Outcome {
    if (!shared) return {false, "three-factor model unavailable"};
    const auto t0 = Clock::now();
    QuadConfig cfg;
    cfg.abs_tol = 1e-8;
    const TruncatedKernel kn = truncated_kernel(shared->spec, 50, cfg);
    double dev = 0.0;
    for (const Complex z : grid_points(0.5))
      for (const Complex zeta : grid_points(0.5))
        dev = std::max(dev, std::abs(eval_main(*shared, z, zeta) - kn.eval(z, zeta)));
    const bool in_time = seconds_since(t0) < 300.0;
    return {dev < 1e-4 && in_time, "degree-50 dev " + num(dev) + " (tol 1e-04)"};
  });

  run(6, "reproducing property", [&]() -> Outcome {
    if (!shared) return {false, "three-factor model unavailable"};
    const double dev = reproducing_dev(*shared);
    return {dev < 1e-6, "monomial dev " + num(dev) + " for degrees 0..4 (tol 1e-06)"};
  });

  run(7, "contractive divisors", [&]() -> Outcome {
    QuadConfig cfg;
    cfg.abs_tol = 1e-9;
    const DivisorModel d1 = build_divisor(ZeroSet(2.0, {{Complex{}, 1}}), cfg);
    double dev1 = 0.0;
    for (int j = 0; j < 6; ++j) {
      const Complex z = std::polar(0.1 + 0.13 * j, 0.9 * j);
      dev1 = std::max(dev1, std::abs(eval_divisor(d1, z) - std::sqrt(2.0) * z));
    }
    const Complex a(0.5, 0.0);
    const DivisorModel d2 = build_divisor(ZeroSet(2.0, {{a, 1}}), cfg);
    double dev2 = 0.0;
    for (int j = 0; j < 8; ++j) {
      const Complex z = std::polar(0.1 * (j + 1), 0.77 * j);
      const Complex one(1.0, 0.0);
      const Complex closed = std::pow(2.0 - std::norm(a), -0.5) *
                             (one + (1.0 - std::norm(a)) / (one - std::conj(a) * z)) *
                             (z - a) / (one - std::conj(a) * z);
      dev2 = std::max(dev2, std::abs(eval_divisor(d2, z) - closed));
    }
    const GradeHint h2[] = {{a, 2.0}};
    const double n2 = norm_p(
        [&](Complex z) { return Complex(eval_divisor_abs(d2, z), 0.0); }, 2.0, cfg, h2);
    const DivisorModel d3 = build_divisor(
        ZeroSet(2.0, {{Complex(0.3, 0.0), 1}, {Complex(-0.4, 0.0), 2}}), cfg);
    const GradeHint h3[] = {{Complex(0.3, 0.0), 2.0}, {Complex(-0.4, 0.0), 4.0}};
    const double n3 = norm_p(
        [&](Complex z) { return Complex(eval_divisor_abs(d3, z), 0.0); }, 2.0, cfg, h3);
    const bool pass = dev1 < 1e-12 && dev2 < 1e-10 &&
                      std::abs(n2 - 1.0) < 1e-6 && std::abs(n3 - 1.0) < 1e-5;
    return {pass, "axis dev " + num(dev1) + " (tol 1e-12), closed-form dev " +
                      num(dev2) + " (tol 1e-10), norms off " + num(std::abs(n2 - 1.0)) +
                      " / " + num(std::abs(n3 - 1.0))};
  });

  run(8, "coefficient identities", [&]() -> Outcome {
    std::mt19937 rng(91101u);
    double res = 0.0;
    for (int t = 0; t < 100; ++t) {
      const int s = 1 + t % 6;
      const RootSet roots(draw_roots(rng, s, 0.85, 0.05, 0.0));
      const ComplexPoly q = from_roots(roots);
      const ComplexPoly qs = reverse(q, s);
      const ComplexPoly prod = qs * q;
      const ComplexPoly dprod = qs * q.derivative();
      for (int l = 0; l <= s; ++l) {
        Complex sum{};
        for (int k = 0; k <= l; ++k) sum += q.coeff(k) * std::conj(q.coeff(s - l + k));
        res = std::max(res, std::abs(prod.coeff(l) - sum));
      }
      for (int l = 0; l + 1 <= s; ++l) {
        Complex sum{};
        for (int j = 1; j <= l + 1; ++j)
          sum += double(j) * q.coeff(j) * std::conj(q.coeff(s - 1 - l + j));
        res = std::max(res, std::abs(dprod.coeff(l) - sum));
      }
      for (int l = 0; l <= 2 * s; ++l)
        res = std::max(res, std::abs(prod.coeff(l) - std::conj(prod.coeff(2 * s - l))));
      const ComplexPoly lhs = qs.derivative().shifted(1);
      const ComplexPoly rhs =
          Complex(double(s), 0.0) * qs - reverse(q.derivative(), s - 1);
      const ComplexPoly diff = lhs - rhs;
      for (const Complex& c : diff.coeffs()) res = std::max(res, std::abs(c));
    }
    return {res < 1e-13, "coefficient residual " + num(res) +
                             " over 100 root sets (tol 1e-13)"};
  });

  run(9, "origin-system symmetry", [&]() -> Outcome {
    double worst = 0.0;
    for (const double r : herm) worst = std::max(worst, r);
    return {!herm.empty() && worst < 1e-8,
            "max pre-symmetrization residual " + num(worst) + " over " +
                std::to_string(herm.size()) + " systems (tol 1e-08)"};
  });

  run(10, "root at the origin", [&]() -> Outcome {
    std::mt19937 rng(73001u);
    const std::vector<Complex> roots = draw_roots(rng, 3, 0.6, 0.2, 0.15);
    const WeightSpec spec({{Complex{}, 1.0}, {roots[1], 2.0}, {roots[2], 0.5}});
    const KernelModel m = build_model(spec, QuadConfig{});
    const double dev = max_pairwise_rep_dev(m, grid_points(0.6));
    const double zdev = at_zero_dev(m);
    const double rdev = reproducing_dev(m);
    return {dev < 1e-9 && zdev < 1e-12 && rdev < 1e-6,
            "pairwise dev " + num(dev) + ", origin section dev " + num(zdev) +
                ", monomial dev " + num(rdev)};
  });

  std::printf("acceptance: %d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
