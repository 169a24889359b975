#include "bergkern/weight.hpp"

#include <cmath>
#include <limits>

namespace bergkern {

WeightSpec::WeightSpec(std::vector<WeightFactor> factors, double min_separation)
    : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (!(std::abs(f.a) < 1.0))
      throw DomainViolation("weight base point outside the open unit disk");
    if (!(f.p > -2.0)) throw DomainViolation("weight exponent must exceed -2");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (std::size_t j = i + 1; j < factors_.size(); ++j) {
      if (factors_[i].a == factors_[j].a)
        throw DistinctnessViolation("coincident weight base points");
      if (std::abs(factors_[i].a - factors_[j].a) < min_separation) near_ = true;
    }
  }
}

const WeightFactor& WeightSpec::factor(int k) const {
  if (k < 0 || k >= size()) throw IndexViolation("weight factor index out of range");
  return factors_[static_cast<std::size_t>(k)];
}

double WeightSpec::A(int k) const {
  const WeightFactor& f = factor(k);
  return 0.5 * f.p * (1.0 - std::norm(f.a));
}

bool WeightSpec::all_zero_exponents() const {
  for (const auto& f : factors_)
    if (f.p != 0.0) return false;
  return true;
}

RootSet WeightSpec::roots() const {
  std::vector<Complex> rs;
  rs.reserve(factors_.size());
  for (const auto& f : factors_) rs.push_back(f.a);
  return RootSet(std::move(rs));
}

namespace {

// |(z - a)/(1 - conj(a) z)|^p through squared magnitudes; one pow per factor.
inline double factor_value(Complex z, Complex a, double p) {
  if (p == 0.0) return 1.0;
  const double num = std::norm(z - a);
  const double den = std::norm(1.0 - std::conj(a) * z);
  if (num == 0.0) return p > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::pow(num / den, 0.5 * p);
}

}  // namespace

double weight_eval(const WeightSpec& spec, Complex z) {
  if (!(std::abs(z) < 1.0))
    throw DomainViolation("weight evaluation point outside the open unit disk");
  double h = 1.0;
  for (const auto& f : spec.factors()) h *= factor_value(z, f.a, f.p);
  return h;
}

double weight_eval_excluding(const WeightSpec& spec, int k, Complex z) {
  if (!(std::abs(z) < 1.0))
    throw DomainViolation("weight evaluation point outside the open unit disk");
  const int s = spec.size();
  if (k < 0 || k >= s) throw IndexViolation("weight factor index out of range");
  double h = 1.0;
  for (int j = 0; j < s; ++j) {
    const WeightFactor& f = spec.factor(j);
    if (j == k) {
      // keep only the denominator part |1 - conj(a_k) z|^{-p_k}
      if (f.p != 0.0) h *= std::pow(std::norm(1.0 - std::conj(f.a) * z), -0.5 * f.p);
    } else {
      h *= factor_value(z, f.a, f.p);
    }
  }
  return h;
}

}  // namespace bergkern
