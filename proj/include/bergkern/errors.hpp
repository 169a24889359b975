#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bergkern {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain (|a| >= 1, p <= -2, evaluation
// point outside the open disk, ...).
struct DomainViolation : Error {
  using Error::Error;
};

// Two roots or zero-set points compare exactly equal.
struct DistinctnessViolation : Error {
  using Error::Error;
};

// Index outside the range a construction is defined for.
struct IndexViolation : Error {
  using Error::Error;
};

// A linear system (Gram or monomial Gram) is too ill-conditioned to trust.
struct IllConditioned : Error {
  double condition;
  IllConditioned(const std::string& what, double cond)
      : Error(what), condition(cond) {}
};

// Adaptive quadrature exhausted its refinement budget before reaching the
// requested tolerance. Carries the best available estimate and a bound on
// its error so callers can decide whether to accept it anyway.
struct ToleranceNotMet : Error {
  Complex best_estimate;
  double error_bound;
  ToleranceNotMet(const std::string& what, Complex best, double bound)
      : Error(what), best_estimate(best), error_bound(bound) {}
};

// A continuous branch of a fractional power could not be tracked because the
// underlying function came too close to zero along the continuation path.
struct BranchAmbiguity : Error {
  using Error::Error;
};

}  // namespace bergkern
