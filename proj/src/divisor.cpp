#include "bergkern/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bergkern {

namespace {

constexpr double kBranchFloor = 1e-12;

Complex int_pow(Complex z, int n) {
  Complex acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) acc *= z;
  return acc;
}

// log K(t z, 0) continued along t in [0, 1], anchored at the real value
// log K(0,0). Step ratios are kept close to 1 so the principal branch of
// each incremental log is the continuous one.
Complex radial_log_continuation(const KernelModel& kernel, double k00, Complex z) {
  Complex w_prev{k00, 0.0};
  Complex log_acc{std::log(k00), 0.0};
  double t = 0.0, dt = 0.125;
  while (t < 1.0) {
    const double t_next = std::min(1.0, t + dt);
    const Complex w_next = eval_at_zero(kernel, t_next * z);
    if (std::abs(w_next) < kBranchFloor)
      throw BranchAmbiguity("kernel value vanishes along the branch path");
    const Complex ratio = w_next / w_prev;
    if (std::abs(ratio - 1.0) > 0.5) {
      dt *= 0.5;
      if (dt < 1e-6)
        throw BranchAmbiguity("kernel value varies too fast along the branch path");
      continue;
    }
    log_acc += std::log(ratio);
    w_prev = w_next;
    t = t_next;
  }
  return log_acc;
}

}  // namespace

ZeroSet::ZeroSet(double p_in, std::vector<ZeroPoint> pts)
    : p(p_in), points(std::move(pts)) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw DomainViolation("zero-set exponent p must be positive and finite");
  for (const auto& pt : points) {
    if (!(std::abs(pt.a) < 1.0))
      throw DomainViolation("zero outside the open unit disk");
    if (pt.m < 1) throw DomainViolation("multiplicity must be at least 1");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].a == points[j].a)
        throw DistinctnessViolation("coincident zeros");
}

DivisorModel build_divisor(const ZeroSet& zs, const QuadConfig& cfg) {
  std::vector<WeightFactor> factors;
  factors.reserve(zs.points.size());
  for (const auto& pt : zs.points) factors.push_back({pt.a, pt.m * zs.p});
  DivisorModel model;
  model.zeros = zs;
  model.kernel = std::make_shared<KernelModel>(build_model(WeightSpec(std::move(factors)), cfg));
  model.k00 = eval_main(*model.kernel, Complex{}, Complex{}).real();
  if (!(model.k00 > 0.0))
    throw IllConditioned("kernel value at the origin is not positive", model.k00);
  return model;
}

Complex eval_divisor(const DivisorModel& model, Complex z) {
  if (!(std::abs(z) < 1.0))
    throw DomainViolation("divisor evaluation point outside the open unit disk");
  Complex bl{1.0, 0.0};
  for (const auto& pt : model.zeros.points)
    bl *= int_pow((z - pt.a) / (1.0 - std::conj(pt.a) * z), pt.m);
  const Complex log_k = radial_log_continuation(*model.kernel, model.k00, z);
  const double p = model.zeros.p;
  return std::exp((2.0 / p) * log_k - (1.0 / p) * std::log(model.k00)) * bl;
}

double eval_divisor_abs(const DivisorModel& model, Complex z) {
  if (!(std::abs(z) < 1.0))
    throw DomainViolation("divisor evaluation point outside the open unit disk");
  double bl = 1.0;
  for (const auto& pt : model.zeros.points) {
    const double f = std::abs((z - pt.a) / (1.0 - std::conj(pt.a) * z));
    bl *= std::pow(f, pt.m);
  }
  const double p = model.zeros.p;
  const double kv = std::abs(eval_at_zero(*model.kernel, z));
  return std::pow(model.k00, -1.0 / p) * std::pow(kv, 2.0 / p) * bl;
}

DivisorReport verify_divisor(const DivisorModel& model, const QuadConfig& cfg) {
  DivisorReport rep;
  rep.norm_tolerance = 1e-5;
  rep.zero_tolerance = 1e-8;
  rep.agreement_tolerance = 1e-10;

  std::vector<GradeHint> hints;
  hints.reserve(model.zeros.points.size());
  for (const auto& pt : model.zeros.points)
    hints.push_back({pt.a, pt.m * model.zeros.p});
  const Integrand g_abs = [&](Complex z) {
    return Complex(eval_divisor_abs(model, z), 0.0);
  };
  rep.norm_value = norm_p(g_abs, model.zeros.p, cfg, hints);
  rep.norm_deviation = std::abs(rep.norm_value - 1.0);
  rep.norm_ok = rep.norm_deviation <= rep.norm_tolerance;

  // Taylor mass below the assigned multiplicity, from a small circle around
  // each zero. G is analytic, so a 32-point mean recovers the coefficients
  // up to aliasing terms that are negligible at these radii.
  constexpr int kCirclePoints = 32;
  rep.zeros_ok = true;
  for (const auto& pt : model.zeros.points) {
    double radius = 0.5 * (1.0 - std::abs(pt.a));
    for (const auto& other : model.zeros.points)
      if (other.a != pt.a)
        radius = std::min(radius, 0.5 * std::abs(other.a - pt.a));
    radius = std::min(radius, 0.05);

    std::vector<Complex> samples(kCirclePoints);
    for (int i = 0; i < kCirclePoints; ++i) {
      const double phi = 2.0 * std::numbers::pi * i / kCirclePoints;
      samples[static_cast<std::size_t>(i)] =
          eval_divisor(model, pt.a + std::polar(radius, phi));
    }
    double low_mass = 0.0, lead = 0.0;
    for (int j = 0; j <= pt.m; ++j) {
      Complex coef{};
      for (int i = 0; i < kCirclePoints; ++i) {
        const double phi = 2.0 * std::numbers::pi * i * j / kCirclePoints;
        coef += samples[static_cast<std::size_t>(i)] * std::polar(1.0, -phi);
      }
      coef /= static_cast<double>(kCirclePoints);
      if (j < pt.m)
        low_mass = std::max(low_mass, std::abs(coef));
      else
        lead = std::abs(coef);
    }
    const double resid = low_mass / std::max(1.0, lead);
    rep.zero_residuals.push_back(resid);
    if (resid > rep.zero_tolerance) rep.zeros_ok = false;
  }

  rep.path_agreement = 0.0;
  for (int ir = 0; ir < 3; ++ir) {
    const double r = 0.15 + 0.3 * ir;
    for (int it = 0; it < 8; ++it) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * (it + 0.3) / 8.0);
      const Complex a = eval_at_zero(*model.kernel, z);
      const Complex b = eval_main(*model.kernel, z, Complex{});
      rep.path_agreement = std::max(rep.path_agreement, std::abs(a - b));
    }
  }
  rep.agreement_ok = rep.path_agreement <= rep.agreement_tolerance;
  return rep;
}

}  // namespace bergkern
