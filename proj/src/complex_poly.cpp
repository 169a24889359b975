#include "bergkern/complex_poly.hpp"

#include <cmath>
#include <cstdlib>

namespace bergkern {

ComplexPoly ComplexPoly::monomial(int k, Complex c) {
  if (k < 0) throw IndexViolation("monomial degree must be nonnegative");
  std::vector<Complex> cs(static_cast<std::size_t>(k) + 1);
  cs.back() = c;
  return ComplexPoly(std::move(cs));
}

Complex ComplexPoly::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> cs(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    cs[j - 1] = static_cast<double>(j) * coeffs_[j];
  return ComplexPoly(std::move(cs));
}

ComplexPoly ComplexPoly::conjugated() const {
  std::vector<Complex> cs(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) cs[j] = std::conj(coeffs_[j]);
  return ComplexPoly(std::move(cs));
}

ComplexPoly ComplexPoly::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  std::vector<Complex> cs(coeffs_.begin(),
                          coeffs_.begin() + std::min(coeffs_.size(),
                                                     static_cast<std::size_t>(max_degree) + 1));
  return ComplexPoly(std::move(cs));
}

ComplexPoly ComplexPoly::shifted(int k) const {
  if (k < 0) throw IndexViolation("shift power must be nonnegative");
  if (is_zero()) return {};
  std::vector<Complex> cs(coeffs_.size() + static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) cs[j + static_cast<std::size_t>(k)] = coeffs_[j];
  return ComplexPoly(std::move(cs));
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  normalize();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  normalize();
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(Complex c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

ComplexPoly operator*(const ComplexPoly& lhs, const ComplexPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Complex> cs(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      cs[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return ComplexPoly(std::move(cs));
}

std::pair<ComplexPoly, Complex> ComplexPoly::deflated(Complex root) const {
  if (is_zero()) return {ComplexPoly{}, Complex{}};
  if (degree() == 0) return {ComplexPoly{}, coeffs_[0]};
  std::vector<Complex> q(coeffs_.size() - 1);
  Complex carry = coeffs_.back();
  for (int j = degree() - 1; j >= 0; --j) {
    q[static_cast<std::size_t>(j)] = carry;
    carry = coeffs_[static_cast<std::size_t>(j)] + root * carry;
  }
  return {ComplexPoly(std::move(q)), carry};
}

ComplexPoly ComplexPoly::series_inverse(int order) const {
  if (is_zero() || coeffs_[0] == Complex{})
    throw DomainViolation("series inverse requires a nonzero constant term");
  if (order < 0) return {};
  std::vector<Complex> u(static_cast<std::size_t>(order) + 1);
  u[0] = 1.0 / coeffs_[0];
  for (int n = 1; n <= order; ++n) {
    Complex acc{};
    for (int j = 1; j <= n; ++j) acc += coeff(j) * u[static_cast<std::size_t>(n - j)];
    u[static_cast<std::size_t>(n)] = -acc / coeffs_[0];
  }
  return ComplexPoly(std::move(u));
}

ComplexPoly ComplexPoly::series_quotient(const ComplexPoly& den, int order) const {
  if (den.is_zero() || den.coeffs_[0] == Complex{})
    throw DomainViolation("series quotient requires a nonzero denominator constant term");
  if (order < 0) return {};
  std::vector<Complex> r(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    Complex acc = coeff(n);
    for (int j = 1; j <= n; ++j) acc -= den.coeff(j) * r[static_cast<std::size_t>(n - j)];
    r[static_cast<std::size_t>(n)] = acc / den.coeffs_[0];
  }
  return ComplexPoly(std::move(r));
}

RootSet::RootSet(std::vector<Complex> roots, double min_separation)
    : roots_(std::move(roots)) {
  for (const auto& a : roots_) {
    if (!(std::abs(a) < 1.0))
      throw DomainViolation("root outside the open unit disk");
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (std::size_t j = i + 1; j < roots_.size(); ++j) {
      if (roots_[i] == roots_[j])
        throw DistinctnessViolation("coincident roots");
      if (std::abs(roots_[i] - roots_[j]) < min_separation) near_ = true;
    }
  }
}

Complex RootSet::root(int k) const {
  if (k < 0 || k >= size()) throw IndexViolation("root index out of range");
  return roots_[static_cast<std::size_t>(k)];
}

ComplexPoly from_roots(const RootSet& roots) {
  ComplexPoly q = ComplexPoly::one();
  for (const auto& a : roots.roots()) q = q * ComplexPoly{-a, Complex(1.0, 0.0)};
  return q;
}

ComplexPoly reverse(const ComplexPoly& q, int s) {
  if (s < 0) throw IndexViolation("reversal degree must be nonnegative");
  std::vector<Complex> cs(static_cast<std::size_t>(s) + 1);
  for (int l = 0; l <= s; ++l) cs[static_cast<std::size_t>(l)] = std::conj(q.coeff(s - l));
  return ComplexPoly(std::move(cs));
}

std::vector<Subproduct> subproducts(const RootSet& roots) {
  const int s = roots.size();
  if (s < 1) throw IndexViolation("subproducts require at least one root");
  const ComplexPoly q = from_roots(roots);
  std::vector<Subproduct> out;
  out.reserve(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k) {
    auto [q_k, rem] = q.deflated(roots.root(k));
    (void)rem;  // equals q(a_k), zero up to roundoff
    out.push_back({q_k, reverse(q_k, s - 1)});
  }
  return out;
}

}  // namespace bergkern
