#include "bergkern/serialization.hpp"

#include <cstdio>

namespace bergkern {

namespace {

double number_from_json(const Json& j, const char* what) {
  if (!j.is_number()) throw DomainViolation(std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw DomainViolation("complex value must be a [re, im] pair");
  return {number_from_json(j[0], "re"), number_from_json(j[1], "im")};
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array()) throw DomainViolation("matrix must be an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw DomainViolation("matrix rows must be arrays");
    cols = static_cast<Eigen::Index>(j[0].size());
  }
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_array() ||
        static_cast<Eigen::Index>(j[static_cast<std::size_t>(i)].size()) != cols)
      throw DomainViolation("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = complex_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
  }
  return m;
}

Json quad_config_to_json(const QuadConfig& cfg) {
  return Json{{"abs_tol", cfg.abs_tol},
              {"max_depth", cfg.max_depth},
              {"radial_order", cfg.radial_order},
              {"angular_order", cfg.angular_order},
              {"grading_exponent", cfg.grading_exponent}};
}

QuadConfig quad_config_from_json(const Json& j) {
  if (!j.is_object()) throw DomainViolation("quadrature config must be an object");
  QuadConfig cfg;
  if (j.contains("abs_tol")) cfg.abs_tol = number_from_json(j["abs_tol"], "abs_tol");
  if (j.contains("max_depth")) {
    if (!j["max_depth"].is_number_integer())
      throw DomainViolation("max_depth must be an integer");
    cfg.max_depth = j["max_depth"].get<int>();
  }
  if (j.contains("radial_order")) {
    if (!j["radial_order"].is_number_integer())
      throw DomainViolation("radial_order must be an integer");
    cfg.radial_order = j["radial_order"].get<int>();
  }
  if (j.contains("angular_order")) {
    if (!j["angular_order"].is_number_integer())
      throw DomainViolation("angular_order must be an integer");
    cfg.angular_order = j["angular_order"].get<int>();
  }
  if (j.contains("grading_exponent"))
    cfg.grading_exponent = number_from_json(j["grading_exponent"], "grading_exponent");
  cfg.validate();
  return cfg;
}

Json weight_spec_to_json(const WeightSpec& spec) {
  Json factors = Json::array();
  for (const auto& f : spec.factors())
    factors.push_back(Json{{"a", complex_to_json(f.a)}, {"p", f.p}});
  return Json{{"factors", std::move(factors)}};
}

WeightSpec weight_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw DomainViolation("weight spec must be an object with a factors array");
  std::vector<WeightFactor> factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_object() || !f.contains("a") || !f.contains("p"))
      throw DomainViolation("weight factor must carry a and p");
    factors.push_back({complex_from_json(f["a"]), number_from_json(f["p"], "p")});
  }
  return WeightSpec(std::move(factors));
}

Json zero_set_to_json(const ZeroSet& zs) {
  Json zeros = Json::array();
  for (const auto& pt : zs.points)
    zeros.push_back(Json{{"a", complex_to_json(pt.a)}, {"m", pt.m}});
  return Json{{"p", zs.p}, {"zeros", std::move(zeros)}};
}

ZeroSet zero_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("zeros") || !j["zeros"].is_array())
    throw DomainViolation("zero set must be an object with p and a zeros array");
  std::vector<ZeroPoint> pts;
  for (const auto& z : j["zeros"]) {
    if (!z.is_object() || !z.contains("a"))
      throw DomainViolation("zero entry must carry a");
    ZeroPoint pt;
    pt.a = complex_from_json(z["a"]);
    if (z.contains("m")) {
      if (!z["m"].is_number_integer()) throw DomainViolation("m must be an integer");
      pt.m = z["m"].get<int>();
    }
    pts.push_back(pt);
  }
  return ZeroSet(number_from_json(j["p"], "p"), std::move(pts));
}

Json model_to_json(const KernelModel& model, bool include_d) {
  Json out{{"spec", weight_spec_to_json(model.spec)},
           {"s", model.s()},
           {"kappa", matrix_to_json(model.origin.kappa)},
           {"hermitian_residual", model.origin.hermitian_residual},
           {"gram_condition", model.origin.gram_condition}};
  if (include_d) out["d"] = matrix_to_json(model.d_matrix());
  return out;
}

Json divisor_report_to_json(const DivisorReport& rep) {
  Json residuals = Json::array();
  for (double r : rep.zero_residuals) residuals.push_back(r);
  return Json{{"norm", rep.norm_value},
              {"norm_deviation", rep.norm_deviation},
              {"norm_tolerance", rep.norm_tolerance},
              {"norm_ok", rep.norm_ok},
              {"zero_residuals", std::move(residuals)},
              {"zero_tolerance", rep.zero_tolerance},
              {"zeros_ok", rep.zeros_ok},
              {"path_agreement", rep.path_agreement},
              {"agreement_tolerance", rep.agreement_tolerance},
              {"agreement_ok", rep.agreement_ok},
              {"ok", rep.ok()}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_kernel_csv_header(std::ostream& os) {
  os << "re_z,im_z,re_zeta,im_zeta,re_K,im_K\n";
}

void write_kernel_csv_row(std::ostream& os, Complex z, Complex zeta, Complex k) {
  os << format_double(z.real()) << ',' << format_double(z.imag()) << ','
     << format_double(zeta.real()) << ',' << format_double(zeta.imag()) << ','
     << format_double(k.real()) << ',' << format_double(k.imag()) << '\n';
}

}  // namespace bergkern
