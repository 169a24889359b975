// Command-line front end: kernel sampling, origin derivatives, zero
// divisors, self-verification, and independent oracle values. All output is
// deterministic for a fixed invocation; --seed is accepted only so callers
// with seed-threading conventions do not need a special case.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergkern/divisor.hpp"
#include "bergkern/kernel_model.hpp"
#include "bergkern/oracle.hpp"
#include "bergkern/serialization.hpp"

namespace {

using namespace bergkern;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string rep = "main";
  std::string grid = "-0.6:0.6:5";
  std::string format;
  double tol = 0.0;
  bool tol_set = false;
  long seed = 0;
};

void emit_error(const std::string& type, const std::string& message) {
  Json err{{"error", Json{{"type", type}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainViolation("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainViolation("cannot open output file: " + path);
  out << text;
}

Json parse_input_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainViolation(std::string("input is not valid JSON: ") + e.what());
  }
}

// "r0:r1:n" -> n evenly spaced real values from r0 to r1, all inside the disk.
std::vector<double> parse_grid(const std::string& desc) {
  double r0 = 0.0, r1 = 0.0;
  int n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(desc);
  ss >> r0 >> c1 >> r1 >> c2 >> n;
  if (ss.fail() || c1 != ':' || c2 != ':' || !ss.eof())
    throw DomainViolation("grid must have the form r0:r1:n");
  if (n < 1) throw DomainViolation("grid point count must be positive");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    values.push_back(r0 + (r1 - r0) * t);
  }
  for (double v : values)
    if (!(std::abs(v) < 1.0)) throw DomainViolation("grid value outside the open unit disk");
  return values;
}

QuadConfig make_config(const Json& input, const Options& opts) {
  QuadConfig cfg;
  if (input.is_object() && input.contains("quad")) cfg = quad_config_from_json(input["quad"]);
  if (opts.tol_set) cfg.abs_tol = opts.tol;
  cfg.validate();
  return cfg;
}

WeightSpec load_weight(const Json& input) {
  WeightSpec spec = weight_spec_from_json(input);
  if (spec.size() < 1) throw DomainViolation("weight spec needs at least one factor");
  return spec;
}

// Sample pairs for the two-variable kernel: explicit "points" list in the
// input wins over the real grid, which pairs every value with every value.
std::vector<std::pair<Complex, Complex>> kernel_pairs(const Json& input, const Options& opts) {
  std::vector<std::pair<Complex, Complex>> pairs;
  if (input.is_object() && input.contains("points")) {
    const Json& pts = input["points"];
    if (!pts.is_array()) throw DomainViolation("points must be an array");
    for (const auto& pt : pts) {
      if (!pt.is_array() || pt.size() != 2)
        throw DomainViolation("kernel point must be a [z, zeta] pair");
      pairs.emplace_back(complex_from_json(pt[0]), complex_from_json(pt[1]));
    }
    return pairs;
  }
  const std::vector<double> values = parse_grid(opts.grid);
  for (double x : values)
    for (double y : values) pairs.emplace_back(Complex{x, 0.0}, Complex{y, 0.0});
  return pairs;
}

std::vector<Complex> single_points(const Json& input, const Options& opts) {
  std::vector<Complex> pts;
  if (input.is_object() && input.contains("points")) {
    const Json& arr = input["points"];
    if (!arr.is_array()) throw DomainViolation("points must be an array");
    for (const auto& pt : arr) pts.push_back(complex_from_json(pt));
    return pts;
  }
  for (double x : parse_grid(opts.grid)) pts.push_back(Complex{x, 0.0});
  return pts;
}

using KernelEval = Complex (*)(const KernelModel&, Complex, Complex);

KernelEval pick_rep(const std::string& rep) {
  if (rep == "main") return &eval_main;
  if (rep == "canonical") return &eval_canonical;
  if (rep == "mgs") return &eval_mgs;
  throw DomainViolation("rep must be one of main, canonical, mgs");
}

int cmd_kernel(const Json& input, const Options& opts) {
  const WeightSpec spec = load_weight(input);
  const QuadConfig cfg = make_config(input, opts);
  const KernelEval eval = pick_rep(opts.rep);
  const KernelModel model = build_model(spec, cfg);
  const auto pairs = kernel_pairs(input, opts);

  const std::string format = opts.format.empty() ? "csv" : opts.format;
  if (format == "csv") {
    std::ostringstream os;
    write_kernel_csv_header(os);
    for (const auto& [z, zeta] : pairs) write_kernel_csv_row(os, z, zeta, eval(model, z, zeta));
    write_output(opts.output, os.str());
    return 0;
  }
  if (format != "json") throw DomainViolation("format must be json or csv");
  Json samples = Json::array();
  for (const auto& [z, zeta] : pairs)
    samples.push_back(Json{{"z", complex_to_json(z)},
                           {"zeta", complex_to_json(zeta)},
                           {"k", complex_to_json(eval(model, z, zeta))}});
  Json out{{"spec", weight_spec_to_json(spec)}, {"rep", opts.rep}, {"samples", std::move(samples)}};
  write_output(opts.output, out.dump(2) + "\n");
  return 0;
}

int cmd_derivs(const Json& input, const Options& opts) {
  const WeightSpec spec = load_weight(input);
  const QuadConfig cfg = make_config(input, opts);
  if (!opts.format.empty() && opts.format != "json")
    throw DomainViolation("derivs output is json only");
  const KernelModel model = build_model(spec, cfg);

  const int m = model.s() - 1;
  Eigen::MatrixXcd raw(std::max(m, 0), std::max(m, 0));
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) raw(k, j) = model.origin.raw(k, j);

  Json out{{"spec", weight_spec_to_json(spec)},
           {"s", model.s()},
           {"kappa", matrix_to_json(model.origin.kappa)},
           {"raw", matrix_to_json(raw)},
           {"hermitian_residual", model.origin.hermitian_residual},
           {"gram_condition", model.origin.gram_condition}};
  if (model.s() == 1) out["note"] = "single point: kernel is rational, J == 0";
  write_output(opts.output, out.dump(2) + "\n");
  return 0;
}

int cmd_divisor(const Json& input, const Options& opts) {
  const ZeroSet zs = zero_set_from_json(input);
  const QuadConfig cfg = make_config(input, opts);
  const DivisorModel model = build_divisor(zs, cfg);
  const auto pts = single_points(input, opts);

  const std::string format = opts.format.empty() ? "json" : opts.format;
  if (format == "csv") {
    std::ostringstream os;
    os << "re_z,im_z,re_G,im_G\n";
    for (Complex z : pts) {
      const Complex g = eval_divisor(model, z);
      os << format_double(z.real()) << ',' << format_double(z.imag()) << ','
         << format_double(g.real()) << ',' << format_double(g.imag()) << '\n';
    }
    write_output(opts.output, os.str());
    return 0;
  }
  if (format != "json") throw DomainViolation("format must be json or csv");

  Json samples = Json::array();
  for (Complex z : pts)
    samples.push_back(Json{{"z", complex_to_json(z)},
                           {"g", complex_to_json(eval_divisor(model, z))}});
  const DivisorReport rep = verify_divisor(model, cfg);
  Json out{{"zeroset", zero_set_to_json(zs)},
           {"k00", model.k00},
           {"samples", std::move(samples)},
           {"report", divisor_report_to_json(rep)}};
  write_output(opts.output, out.dump(2) + "\n");
  return rep.ok() ? 0 : 1;
}

struct Check {
  std::string name;
  double tolerance = 0.0;
  double observed = 0.0;
  bool pass() const { return observed <= tolerance; }
};

// End-to-end checks with fixed thresholds. The quadrature config is the
// caller's, so a loosened --tol degrades the model and the checks expose it.
int cmd_verify(const Json& input, const Options& opts) {
  const WeightSpec spec = load_weight(input);
  const QuadConfig cfg = make_config(input, opts);
  if (!opts.format.empty() && opts.format != "json")
    throw DomainViolation("verify output is json only");
  const KernelModel model = build_model(spec, cfg);
  const auto pairs = kernel_pairs(input, opts);
  std::vector<Check> checks;

  {
    Check c{"hermitian_symmetry", 1e-10};
    for (const auto& [z, zeta] : pairs)
      c.observed = std::max(c.observed,
                            std::abs(eval_main(model, z, zeta) -
                                     std::conj(eval_main(model, zeta, z))));
    checks.push_back(c);
  }
  {
    Check c{"representation_equivalence", 1e-9};
    for (const auto& [z, zeta] : pairs) {
      const Complex km = eval_main(model, z, zeta);
      c.observed = std::max(c.observed, std::abs(km - eval_canonical(model, z, zeta)));
      c.observed = std::max(c.observed, std::abs(km - eval_mgs(model, z, zeta)));
    }
    checks.push_back(c);
  }
  {
    // f(z) = integral of f(zeta) K(z,zeta) h(zeta) dsigma for f in the space.
    Check c{"reproducing_property", 1e-6};
    const Complex zs[] = {{0.4, 0.2}, {-0.3, 0.1}};
    for (Complex z : zs) {
      for (int mdeg = 0; mdeg <= 2; ++mdeg) {
        const Complex got = integrate_disk(
            [&](Complex zeta) {
              Complex f{1.0, 0.0};
              for (int i = 0; i < mdeg; ++i) f *= zeta;
              return f * eval_main(model, z, zeta);
            },
            &spec, cfg);
        Complex want{1.0, 0.0};
        for (int i = 0; i < mdeg; ++i) want *= z;
        c.observed = std::max(c.observed, std::abs(got - want));
      }
    }
    checks.push_back(c);
  }
  if (spec.size() == 1) {
    Check c{"oracle_agreement", 1e-12};
    const auto& f = spec.factor(0);
    for (const auto& [z, zeta] : pairs)
      c.observed = std::max(c.observed,
                            std::abs(eval_main(model, z, zeta) -
                                     closed_form_s1(f.a, f.p, z, zeta)));
    checks.push_back(c);
  } else if (spec.size() == 2) {
    Check c{"oracle_agreement", 1e-7};
    const double want = hansbo_k00(spec.factor(0).a, spec.factor(1).a,
                                   spec.factor(0).p, spec.factor(1).p);
    c.observed = std::abs(eval_main(model, 0.0, 0.0) - want);
    checks.push_back(c);
  } else {
    Check c{"oracle_agreement", 1e-4};
    const TruncatedKernel oracle = truncated_kernel(spec, 24, cfg);
    const double grid[] = {-0.4, 0.0, 0.4};
    for (double x : grid)
      for (double y : grid)
        c.observed = std::max(c.observed,
                              std::abs(eval_main(model, x, y) - oracle.eval(x, y)));
    checks.push_back(c);
  }

  bool all = true;
  Json rows = Json::array();
  for (const auto& c : checks) {
    all = all && c.pass();
    rows.push_back(Json{{"name", c.name},
                        {"tolerance", c.tolerance},
                        {"observed", c.observed},
                        {"pass", c.pass()}});
  }
  Json out{{"spec", weight_spec_to_json(spec)}, {"checks", std::move(rows)}, {"pass", all}};
  write_output(opts.output, out.dump(2) + "\n");
  return all ? 0 : 1;
}

// Ground-truth values only; nothing here goes through the origin solver or
// the closed kernel representations.
int cmd_oracle(const Json& input, const Options& opts) {
  const WeightSpec spec = load_weight(input);
  const QuadConfig cfg = make_config(input, opts);
  if (!opts.format.empty() && opts.format != "json")
    throw DomainViolation("oracle output is json only");
  int n = 50;
  if (input.contains("N")) {
    if (!input["N"].is_number_integer() || input["N"].get<int>() < 0)
      throw DomainViolation("N must be a nonnegative integer");
    n = input["N"].get<int>();
  }
  const auto pairs = kernel_pairs(input, opts);
  const TruncatedKernel oracle = truncated_kernel(spec, n, cfg);

  Json samples = Json::array();
  for (const auto& [z, zeta] : pairs)
    samples.push_back(Json{{"z", complex_to_json(z)},
                           {"zeta", complex_to_json(zeta)},
                           {"k", complex_to_json(oracle.eval(z, zeta))}});
  Json out{{"spec", weight_spec_to_json(spec)},
           {"n", n},
           {"k00_truncated", oracle.eval(0.0, 0.0).real()},
           {"samples", std::move(samples)}};
  if (spec.size() == 1) {
    Json cf = Json::array();
    const auto& f = spec.factor(0);
    for (const auto& [z, zeta] : pairs)
      cf.push_back(Json{{"z", complex_to_json(z)},
                        {"zeta", complex_to_json(zeta)},
                        {"k", complex_to_json(closed_form_s1(f.a, f.p, z, zeta))}});
    out["closed_form"] = std::move(cf);
  } else if (spec.size() == 2) {
    out["hansbo_k00"] = hansbo_k00(spec.factor(0).a, spec.factor(1).a,
                                   spec.factor(0).p, spec.factor(1).p);
  }
  write_output(opts.output, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"weighted Bergman kernels and contractive zero divisors"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", opts.input, "input JSON path, - for stdin");
  app.add_option("--output", opts.output, "output path, - for stdout");
  app.add_option("--rep", opts.rep, "kernel representation: main, canonical, mgs");
  app.add_option("--grid", opts.grid, "sample grid r0:r1:n of real points");
  auto* tol_opt = app.add_option("--tol", opts.tol, "quadrature absolute tolerance override");
  app.add_option("--format", opts.format, "output format: json or csv");
  app.add_option("--seed", opts.seed, "accepted and ignored; output is deterministic");
  app.add_subcommand("kernel", "sample the kernel on a grid or point list");
  app.add_subcommand("derivs", "origin derivative matrix and solver diagnostics");
  app.add_subcommand("divisor", "sample the zero divisor and verify its properties");
  app.add_subcommand("verify", "run fixed-threshold end-to-end checks");
  app.add_subcommand("oracle", "independent reference values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("DomainViolation", e.what());
    return 2;
  }
  opts.tol_set = tol_opt->count() > 0;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Json input = parse_input_json(read_input(opts.input));
    if (command == "kernel") return cmd_kernel(input, opts);
    if (command == "derivs") return cmd_derivs(input, opts);
    if (command == "divisor") return cmd_divisor(input, opts);
    if (command == "verify") return cmd_verify(input, opts);
    return cmd_oracle(input, opts);
  } catch (const IllConditioned& e) {
    emit_error("IllConditioned", e.what());
    return 3;
  } catch (const ToleranceNotMet& e) {
    emit_error("ToleranceNotMet", e.what());
    return 3;
  } catch (const BranchAmbiguity& e) {
    emit_error("BranchAmbiguity", e.what());
    return 3;
  } catch (const DistinctnessViolation& e) {
    emit_error("DistinctnessViolation", e.what());
    return 2;
  } catch (const IndexViolation& e) {
    emit_error("IndexViolation", e.what());
    return 2;
  } catch (const DomainViolation& e) {
    emit_error("DomainViolation", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("Error", e.what());
    return 2;
  }
}
