#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "bergkern/divisor.hpp"
#include "bergkern/kernel_model.hpp"
#include "bergkern/quadrature.hpp"
#include "bergkern/weight.hpp"

namespace bergkern {

using Json = nlohmann::json;

// Complex numbers travel as [re, im] pairs; matrices as nested row arrays.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

Json quad_config_to_json(const QuadConfig& cfg);
QuadConfig quad_config_from_json(const Json& j);

Json weight_spec_to_json(const WeightSpec& spec);
WeightSpec weight_spec_from_json(const Json& j);

Json zero_set_to_json(const ZeroSet& zs);
ZeroSet zero_set_from_json(const Json& j);

// Model payload: the weight, the scaled origin derivatives, and optionally
// the coupling matrix of the rational representation.
Json model_to_json(const KernelModel& model, bool include_d);

Json divisor_report_to_json(const DivisorReport& rep);

// Shortest representation that parses back to the same double (17
// significant digits at most).
std::string format_double(double v);

void write_kernel_csv_header(std::ostream& os);
void write_kernel_csv_row(std::ostream& os, Complex z, Complex zeta, Complex k);

}  // namespace bergkern
