#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bergkern/errors.hpp"
#include "bergkern/weight.hpp"

namespace bergkern {

// Controls for the adaptive disk quadrature. abs_tol is the absolute target
// for each requested component; max_depth bounds the bisection depth of any
// cell below the base mesh; the orders are Gauss-Legendre point counts per
// cell and direction (the error estimate doubles them); grading_exponent
// overrides the automatic power map near singular points when positive.
struct QuadConfig {
  double abs_tol = 1e-10;
  int max_depth = 14;
  int radial_order = 12;
  int angular_order = 12;
  double grading_exponent = 0.0;

  void validate() const;
};

enum class Measure {
  plain,                   // d sigma
  weighted,                // h d sigma
  weighted_over_qstar_sq,  // |q*|^{-2} h d sigma
};

// Known non-smooth point of an integrand: |f(z)| ~ |z - a|^{exponent} times
// a smooth factor near a. Used to seed the mesh and the local grading maps.
struct GradeHint {
  Complex a;
  double exponent = 0.0;
};

using Integrand = std::function<Complex(Complex)>;
using BatchIntegrand = std::function<void(Complex, std::span<Complex>)>;

struct BatchResult {
  std::vector<Complex> values;
  std::vector<double> error_bounds;
  std::size_t evaluations = 0;
};

// Integrates dim components of f over the open unit disk against the
// normalized area measure, multiplied by the weight h when spec is present.
// All components share one adaptively refined mesh; refinement stops when
// every component's accumulated error estimate falls below abs_tol. Node
// placement and summation order are deterministic for fixed inputs.
BatchResult integrate_disk_batch(int dim, const BatchIntegrand& f,
                                 const WeightSpec* spec,
                                 std::span<const GradeHint> hints,
                                 const QuadConfig& cfg);

// integral of f d sigma, or of f h d sigma when spec is present.
Complex integrate_disk(const Integrand& f, const WeightSpec* spec,
                       const QuadConfig& cfg);

// <f, g> against the chosen measure built from spec.
Complex inner_product(const Integrand& f, const Integrand& g, Measure measure,
                      const WeightSpec& spec, const QuadConfig& cfg);

// (integral of |f|^p d sigma)^{1/p}, p > 0.
double norm_p(const Integrand& f, double p, const QuadConfig& cfg,
              std::span<const GradeHint> hints = {});

}  // namespace bergkern
