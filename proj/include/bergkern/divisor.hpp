#pragma once

#include <memory>
#include <vector>

#include "bergkern/kernel_model.hpp"

namespace bergkern {

struct ZeroPoint {
  Complex a;
  int m = 1;
};

// Finite zero set with multiplicities inside the open disk, for the p-th
// power space with 0 < p < infinity.
struct ZeroSet {
  double p = 2.0;
  std::vector<ZeroPoint> points;

  ZeroSet() = default;
  ZeroSet(double p_in, std::vector<ZeroPoint> pts);
};

// Contractive zero divisor
//   G(z) = K(0,0)^{-1/p} K(z,0)^{2/p} prod_k ((z - a_k)/(1 - conj(a_k) z))^{m_k}
// where K is the kernel of the induced weight with exponents p_k = m_k p.
// G vanishes exactly on the zero set, has unit p-norm, and division by G is
// norm-contractive on functions vanishing on the zero set.
struct DivisorModel {
  ZeroSet zeros;
  std::shared_ptr<const KernelModel> kernel;
  double k00 = 1.0;  // K(0,0) > 0
};

DivisorModel build_divisor(const ZeroSet& zs, const QuadConfig& cfg);

// Complex value of G with the branch of K(z,0)^{2/p} tracked continuously
// along the radial path from the origin, anchored at the positive real value
// K(0,0). Throws BranchAmbiguity if |K(.,0)| falls below 1e-12 on the path.
Complex eval_divisor(const DivisorModel& model, Complex z);

// |G(z)|; needs no branch tracking.
double eval_divisor_abs(const DivisorModel& model, Complex z);

struct DivisorReport {
  double norm_value = 0.0;  // ||G||_p, target 1
  double norm_deviation = 0.0;
  std::vector<double> zero_residuals;  // per point: max low-order Taylor mass
  double path_agreement = 0.0;  // closed form along zeta = 0 vs eval_main
  double norm_tolerance = 0.0;
  double zero_tolerance = 0.0;
  double agreement_tolerance = 0.0;
  bool norm_ok = false;
  bool zeros_ok = false;
  bool agreement_ok = false;
  bool ok() const { return norm_ok && zeros_ok && agreement_ok; }
};

// Recomputes the defining properties from scratch: the p-norm by adaptive
// quadrature, the vanishing orders by Taylor coefficients on small circles,
// and the agreement of the two kernel evaluation paths along zeta = 0.
DivisorReport verify_divisor(const DivisorModel& model, const QuadConfig& cfg);

}  // namespace bergkern
