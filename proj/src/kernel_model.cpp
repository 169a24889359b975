#include "bergkern/kernel_model.hpp"

#include <Eigen/LU>
#include <cmath>

namespace bergkern {

namespace {

void check_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) throw DomainViolation(std::string(what) + " outside the open unit disk");
}

Complex int_pow(Complex z, int n) {
  Complex acc{1.0, 0.0};
  for (int i = 0; i < n; ++i) acc *= z;
  return acc;
}

}  // namespace

KernelModel build_model(const WeightSpec& spec, const QuadConfig& cfg) {
  KernelModel model;
  model.spec = spec;
  model.polys = PolySystem::build(spec.roots());
  model.A.reserve(static_cast<std::size_t>(spec.size()));
  for (int k = 0; k < spec.size(); ++k) model.A.push_back(spec.A(k));
  if (spec.size() >= 2) {
    model.origin = solve_origin_derivatives(spec, cfg);
  } else {
    model.origin.s = std::max(spec.size(), 1);
    model.origin.kappa.resize(0, 0);
  }
  return model;
}

Complex eval_J(const KernelModel& model, Complex z, Complex zeta) {
  const int s = model.s();
  if (s < 2) return {};
  const int m = s - 1;
  std::vector<Complex> tv(static_cast<std::size_t>(m)), uv(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    tv[static_cast<std::size_t>(k)] = model.polys.T[static_cast<std::size_t>(k)](z);
    uv[static_cast<std::size_t>(k)] = std::conj(model.polys.T[static_cast<std::size_t>(k)](zeta));
  }
  Complex j{};
  for (int k = 0; k < m; ++k) {
    Complex row{};
    for (int l = 0; l < m; ++l) row += model.origin.kappa(k, l) * uv[static_cast<std::size_t>(l)];
    j += tv[static_cast<std::size_t>(k)] * row;
    j -= static_cast<double>(k + 1) * tv[static_cast<std::size_t>(k)] * uv[static_cast<std::size_t>(k)];
  }
  for (int k = 0; k < s; ++k)
    j -= model.A[static_cast<std::size_t>(k)] * model.polys.L[static_cast<std::size_t>(k)](z, zeta);
  return j;
}

Complex eval_main(const KernelModel& model, Complex z, Complex zeta) {
  check_disk(z, "z");
  check_disk(zeta, "zeta");
  const Complex w = std::conj(zeta);
  const Complex dzw = 1.0 - z * w;
  Complex k = 1.0 / (dzw * dzw);
  for (int i = 0; i < model.s(); ++i) {
    const Complex a = model.polys.roots[static_cast<std::size_t>(i)];
    k += model.A[static_cast<std::size_t>(i)] /
         (dzw * (1.0 - z * std::conj(a)) * (1.0 - a * w));
  }
  if (model.s() >= 2) {
    k += eval_J(model, z, zeta) /
         (model.polys.q_star(z) * std::conj(model.polys.q_star(zeta)));
  }
  return k;
}

const Eigen::MatrixXcd& KernelModel::d_matrix() const {
  std::call_once(caches_->d_once, [this]() {
    const int sz = polys.s;
    Eigen::MatrixXcd jc = Eigen::MatrixXcd::Zero(sz, sz);
    const int m = sz - 1;

    auto padded = [sz](const ComplexPoly& p) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(sz);
      for (int i = 0; i < sz; ++i) v(i) = p.coeff(i);
      return v;
    };

    std::vector<Eigen::VectorXcd> tc;
    for (int k = 0; k < m; ++k) tc.push_back(padded(polys.T[static_cast<std::size_t>(k)]));
    for (int k = 0; k < m; ++k) {
      for (int l = 0; l < m; ++l)
        jc += origin.kappa(k, l) * tc[static_cast<std::size_t>(k)] *
              tc[static_cast<std::size_t>(l)].adjoint();
      jc -= static_cast<double>(k + 1) * tc[static_cast<std::size_t>(k)] *
            tc[static_cast<std::size_t>(k)].adjoint();
    }
    for (int k = 0; k < sz; ++k) {
      for (const ComplexPoly& f : polys.L[static_cast<std::size_t>(k)].factors()) {
        const Eigen::VectorXcd fc = padded(f);
        jc -= A[static_cast<std::size_t>(k)] * fc * fc.adjoint();
      }
    }

    // expansion over the q*_k basis: solve M d M^H = Jc with M(l,k) the
    // l-th coefficient of q*_k; the basis is independent for distinct roots
    Eigen::MatrixXcd basis(sz, sz);
    for (int k = 0; k < sz; ++k)
      for (int l = 0; l < sz; ++l)
        basis(l, k) = polys.subs[static_cast<std::size_t>(k)].q_star_k.coeff(l);
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(basis);
    const Eigen::MatrixXcd x = lu.solve(jc);
    Eigen::MatrixXcd d = lu.solve(x.adjoint()).adjoint();
    caches_->d = 0.5 * (d + d.adjoint());
  });
  return caches_->d;
}

const Eigen::MatrixXcd& KernelModel::kernel_at_roots() const {
  std::call_once(caches_->roots_once, [this]() {
    const int sz = polys.s;
    Eigen::MatrixXcd kr(sz, sz);
    for (int k = 0; k < sz; ++k)
      for (int j = 0; j < sz; ++j)
        kr(k, j) = eval_main(*this, polys.roots[static_cast<std::size_t>(k)],
                             polys.roots[static_cast<std::size_t>(j)]);
    caches_->k_roots = 0.5 * (kr + kr.adjoint());
  });
  return caches_->k_roots;
}

Complex eval_canonical(const KernelModel& model, Complex z, Complex zeta) {
  check_disk(z, "z");
  check_disk(zeta, "zeta");
  const int s = model.s();
  const Complex w = std::conj(zeta);
  const Complex dzw = 1.0 - z * w;
  Complex k = 1.0 / (dzw * dzw);
  for (int i = 0; i < s; ++i) {
    const Complex a = model.polys.roots[static_cast<std::size_t>(i)];
    k += model.A[static_cast<std::size_t>(i)] /
         (dzw * (1.0 - z * std::conj(a)) * (1.0 - a * w));
  }
  if (s < 2) return k;
  const Eigen::MatrixXcd& d = model.d_matrix();
  for (int i = 0; i < s; ++i) {
    const Complex di = 1.0 - z * std::conj(model.polys.roots[static_cast<std::size_t>(i)]);
    for (int j = 0; j < s; ++j) {
      const Complex dj = 1.0 - model.polys.roots[static_cast<std::size_t>(j)] * w;
      k += d(i, j) / (di * dj);
    }
  }
  return k;
}

Complex eval_mgs(const KernelModel& model, Complex z, Complex zeta) {
  check_disk(z, "z");
  check_disk(zeta, "zeta");
  const int s = model.s();
  const std::vector<Complex>& roots = model.polys.roots;
  const Complex w = std::conj(zeta);
  const Complex dzw = 1.0 - w * z;

  Complex k = blaschke_eval(roots, z) * std::conj(blaschke_eval(roots, zeta)) / (dzw * dzw);
  if (s == 0) return k;

  const Eigen::MatrixXcd& kr = model.kernel_at_roots();
  std::vector<Complex> bz(static_cast<std::size_t>(s)), bzeta(static_cast<std::size_t>(s)),
      bown(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    bz[static_cast<std::size_t>(i)] = sub_blaschke_eval(roots, i, z);
    bzeta[static_cast<std::size_t>(i)] = sub_blaschke_eval(roots, i, zeta);
    bown[static_cast<std::size_t>(i)] = sub_blaschke_eval(roots, i, roots[static_cast<std::size_t>(i)]);
  }

  for (int i = 0; i < s; ++i) {
    const Complex a = roots[static_cast<std::size_t>(i)];
    const double p = model.spec.factor(i).p;
    k += (0.5 * p + 1.0) * bz[static_cast<std::size_t>(i)] *
         std::conj(bzeta[static_cast<std::size_t>(i)]) * (w * z - std::norm(a)) /
         (dzw * (1.0 - std::conj(a) * z) * (1.0 - a * w));
  }
  for (int i = 0; i < s; ++i) {
    const Complex ai = roots[static_cast<std::size_t>(i)];
    for (int j = 0; j < s; ++j) {
      const Complex aj = roots[static_cast<std::size_t>(j)];
      k += (1.0 - std::norm(ai)) * (1.0 - std::norm(aj)) * bz[static_cast<std::size_t>(i)] *
           std::conj(bzeta[static_cast<std::size_t>(j)]) * kr(i, j) /
           ((1.0 - std::conj(ai) * z) * (1.0 - aj * w) * bown[static_cast<std::size_t>(i)] *
            std::conj(bown[static_cast<std::size_t>(j)]));
    }
  }
  return k;
}

Complex eval_at_zero(const KernelModel& model, Complex z) {
  check_disk(z, "z");
  const int s = model.s();
  Complex r = std::conj(model.polys.q.coeff(0)) * int_pow(z, s);
  if (s >= 1) {
    Complex c{};
    for (int k = 0; k < s; ++k)
      c += std::conj(model.polys.subs[static_cast<std::size_t>(k)].q_k.coeff(0)) *
           (1.0 + model.A[static_cast<std::size_t>(k)]);
    r += c * int_pow(z, s - 1);
  }
  for (int k = 0; k <= s - 2; ++k)
    r += model.origin.kappa(k, 0) * model.polys.T[static_cast<std::size_t>(k)](z);
  return r / model.polys.q_star(z);
}

Complex eval_origin_z_derivative(const KernelModel& model, int k, Complex zeta) {
  check_disk(zeta, "zeta");
  const int s = model.s();
  if (s < 2 || k < 0 || k > s - 2)
    throw IndexViolation("origin derivative order out of range");
  const ComplexPoly pk = build_P(model.polys, model.spec, k);
  Complex acc = std::conj(pk(zeta));
  for (int j = 0; j <= s - 2; ++j)
    acc += model.origin.kappa(k, j) *
           std::conj(model.polys.T[static_cast<std::size_t>(j)](zeta));
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return fact * acc / std::conj(model.polys.q_star(zeta));
}

}  // namespace bergkern
