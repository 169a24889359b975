#include "bergkern/kernel_polys.hpp"

#include <cmath>

namespace bergkern {

ComplexPoly build_T(const ComplexPoly& q_star, int s, int k) {
  if (s < 2 || k < 0 || k > s - 2)
    throw IndexViolation("T_k requires 0 <= k <= s-2");
  return q_star.truncated(s - 2 - k).shifted(k);
}

Complex LEvaluator::operator()(Complex z, Complex zeta) const {
  Complex acc{};
  for (const auto& f : factors_) acc += f(z) * std::conj(f(zeta));
  return acc;
}

LEvaluator build_L(const ComplexPoly& q_star_k, int s, int k) {
  if (s < 1 || k < 1 || k > s) throw IndexViolation("L_k requires 1 <= k <= s");
  std::vector<ComplexPoly> factors;
  factors.reserve(s >= 1 ? static_cast<std::size_t>(s - 1) : 0);
  for (int r = 0; r <= s - 2; ++r)
    factors.push_back(q_star_k.truncated(s - 2 - r).shifted(r));
  return LEvaluator(std::move(factors));
}

PolySystem PolySystem::build(const RootSet& roots) {
  PolySystem sys;
  sys.s = roots.size();
  sys.roots = roots.roots();
  sys.q = from_roots(roots);
  sys.q_star = reverse(sys.q, sys.s);
  if (sys.s >= 1) sys.subs = subproducts(roots);
  for (int k = 0; k <= sys.s - 2; ++k)
    sys.T.push_back(build_T(sys.q_star, sys.s, k));
  for (int k = 1; k <= sys.s; ++k)
    sys.L.push_back(build_L(sys.subs[static_cast<std::size_t>(k - 1)].q_star_k, sys.s, k));
  return sys;
}

ComplexPoly build_P(const PolySystem& sys, const WeightSpec& spec, int n) {
  const int s = sys.s;
  if (s < 2 || n < 0 || n > s - 2)
    throw IndexViolation("P_n requires 0 <= n <= s-2");
  if (spec.size() != s)
    throw DomainViolation("weight does not match the root system");

  std::vector<Complex> coeffs(static_cast<std::size_t>(s + n) + 1);
  for (int j = 0; j <= n; ++j) {
    Complex b = static_cast<double>(n + 1) * sys.q.coeff(n + 1 - j);
    for (int k = 0; k < s; ++k) {
      const Complex abar = std::conj(sys.roots[static_cast<std::size_t>(k)]);
      const ComplexPoly& q_k = sys.subs[static_cast<std::size_t>(k)].q_k;
      Complex inner{};
      Complex apow{1.0, 0.0};
      for (int r = 0; r <= n - j; ++r) {
        inner += apow * q_k.coeff(n - j - r);
        apow *= abar;
      }
      b += spec.A(k) * inner;
    }
    coeffs[static_cast<std::size_t>(s - 1 + j)] = std::conj(b);
  }
  coeffs[static_cast<std::size_t>(s + n)] =
      static_cast<double>(n + 1) * std::conj(sys.q.coeff(0));
  return ComplexPoly(std::move(coeffs));
}

Complex blaschke_eval(const std::vector<Complex>& roots, Complex z) {
  Complex b{1.0, 0.0};
  for (const auto& a : roots) b *= (z - a) / (1.0 - std::conj(a) * z);
  return b;
}

Complex sub_blaschke_eval(const std::vector<Complex>& roots, int k, Complex z) {
  if (k < 0 || k >= static_cast<int>(roots.size()))
    throw IndexViolation("Blaschke subproduct index out of range");
  Complex b{1.0, 0.0};
  for (int j = 0; j < static_cast<int>(roots.size()); ++j) {
    if (j == k) continue;
    const Complex a = roots[static_cast<std::size_t>(j)];
    b *= (z - a) / (1.0 - std::conj(a) * z);
  }
  return b;
}

}  // namespace bergkern
