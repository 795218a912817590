// Command-line driver: evaluate matrix special functions, run the
// verification suites, and sweep scaling families into CSV studies.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matasym/errors.hpp"
#include "matasym/expansions.hpp"
#include "matasym/io.hpp"
#include "matasym/matrix_functions.hpp"
#include "matasym/oracle.hpp"
#include "matasym/scalar_functions.hpp"
#include "matasym/specfun.hpp"
#include "matasym/spectral.hpp"
#include "matasym/verify.hpp"

namespace {

using namespace matasym;

std::map<std::string, std::string> parse_params(const std::string& csv) {
  std::map<std::string, std::string> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      raise(ErrorCode::invalid_argument, "param '" + item + "' is not key=value");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

double param_double(const std::map<std::string, std::string>& params,
                    const std::string& key, double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  return std::stod(it->second);
}

std::string param_string(const std::map<std::string, std::string>& params,
                         const std::string& key, const std::string& fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void print_matrix(const ComplexMatrix& m) {
  std::printf("dim %ld\n", static_cast<long>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::printf("  %+.12g%+.12gi", m(i, j).real(), m(i, j).imag());
    }
    std::printf("\n");
  }
}

void write_eval_output(const std::string& path, const ComplexMatrix& value,
                       int n_terms, double first_omitted) {
  nlohmann::json j = nlohmann::json::parse(matrix_to_json(value));
  if (n_terms >= 0) {
    j["n_terms"] = n_terms;
    j["first_omitted_norm"] = first_omitted;
  }
  write_text_file(path, j.dump() + "\n");
}

int run_eval(const std::string& function, const std::string& matrix_path,
             int n_terms, const std::string& params_csv, const std::string& out) {
  const auto params = parse_params(params_csv);
  const ComplexMatrix a = read_matrix_file(matrix_path);
  ComplexMatrix value;
  int terms_used = -1;
  double first_omitted = 0.0;

  if (function == "gamma") {
    value = gamma_matrix(a);
  } else if (function == "gamma_stirling") {
    GammaStirlingOptions opts;
    opts.theta = param_double(params, "theta", opts.theta);
    const TruncationResult r = gamma_stirling(a, n_terms, opts);
    value = r.value;
    terms_used = r.n_terms;
    first_omitted = r.first_omitted_norm;
  } else if (function == "bessel_j" || function == "bessel_i") {
    BesselSpec spec;
    spec.kind = function == "bessel_j" ? BesselKind::J : BesselKind::I;
    spec.z = Complex(param_double(params, "z", 1.0), param_double(params, "zim", 0.0));
    value = bessel_integral(a, spec);
  } else if (function == "kummer") {
    const KummerParams kp{
        Complex(param_double(params, "a", 1.0), param_double(params, "a_im", 0.0)),
        Complex(param_double(params, "b", 2.0), param_double(params, "b_im", 0.0))};
    value = kummer_series(kp, a);
  } else if (function == "kummer_asym") {
    const KummerParams kp{
        Complex(param_double(params, "a", 1.0), param_double(params, "a_im", 0.0)),
        Complex(param_double(params, "b", 2.0), param_double(params, "b_im", 0.0))};
    const int sign = static_cast<int>(param_double(params, "sign", -1.0));
    const TruncationResult r = kummer_asymptotic(kp, a, n_terms, sign);
    value = r.value;
    terms_used = r.n_terms;
    first_omitted = r.first_omitted_norm;
  } else if (function == "watson") {
    const WatsonInput input =
        builtin_watson_input(param_string(params, "f", "reciprocal_1p"));
    const ExpansionTermList terms = watson_terms(input, n_terms + 1);
    const TruncationResult r = evaluate_expansion(a, terms, n_terms);
    value = r.value;
    terms_used = r.n_terms;
    first_omitted = r.first_omitted_norm;
  } else if (function == "laplace") {
    const LaplaceProblem problem =
        builtin_laplace_problem(param_string(params, "problem", "x_plus_x2"));
    const TruncationResult r = laplace_evaluate(a, problem, n_terms);
    value = r.value;
    terms_used = r.n_terms;
    first_omitted = r.first_omitted_norm;
  } else {
    raise(ErrorCode::invalid_argument, "unknown eval function '" + function + "'");
  }

  print_matrix(value);
  if (terms_used >= 0) {
    std::printf("n_terms %d\nfirst_omitted_norm %.17g\n", terms_used, first_omitted);
  }
  if (!out.empty()) write_eval_output(out, value, terms_used, first_omitted);
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<CheckResult> results;
  if (suite == "matcore") {
    results = verify_matcore(seed);
  } else if (suite == "expansions") {
    results = verify_expansions(seed);
  } else if (suite == "specfun") {
    results = verify_specfun(seed);
  } else if (suite == "all") {
    results = verify_all(seed);
  } else {
    raise(ErrorCode::invalid_argument, "unknown verify suite '" + suite + "'");
  }
  for (const CheckResult& r : results) {
    std::printf("%s: %s (measured=%.6g, tolerance=%.6g)\n", r.name.c_str(),
                r.passed ? "pass" : "fail", r.measured, r.tolerance);
  }
  return all_passed(results) ? 0 : 1;
}

std::vector<double> parse_scales(const std::string& csv) {
  std::vector<double> scales;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    scales.push_back(std::stod(item));
  }
  if (scales.empty()) {
    raise(ErrorCode::invalid_argument, "scale list is empty");
  }
  if (!std::is_sorted(scales.begin(), scales.end())) {
    raise(ErrorCode::invalid_argument, "scales must be increasing");
  }
  return scales;
}

struct SweepRecord {
  double scale = 0.0;
  double inv_norm = 0.0;
  double truncation_error = 0.0;
  double bound_value = 0.0;
  int n_terms = 0;
};

int run_sweep(const std::string& study, const std::string& matrix_path,
              const std::string& scales_csv, int n_terms,
              const std::string& params_csv, const std::string& out) {
  const auto params = parse_params(params_csv);
  const ComplexMatrix base = read_matrix_file(matrix_path);
  const std::vector<double> scales = parse_scales(scales_csv);

  std::vector<SweepRecord> records;
  for (double s : scales) {
    const ComplexMatrix scaled = s * base;
    SweepRecord rec;
    rec.scale = s;
    rec.inv_norm = 1.0 / smallest_singular_value(scaled);
    rec.n_terms = n_terms;

    if (study == "watson_order") {
      const WatsonInput input =
          builtin_watson_input(param_string(params, "f", "reciprocal_1p"));
      const ExpansionTermList terms = watson_terms(input, n_terms + 1);
      const TruncationResult trunc = evaluate_expansion(scaled, terms, n_terms);
      const ComplexMatrix oracle = matrix_laplace_quadrature(
          input.evaluator, scaled, 0.0, -1.0, input.growth_b, input.growth_m0, 1e-14);
      rec.truncation_error = spectral_norm(ComplexMatrix(oracle - trunc.value));
      rec.bound_value = trunc.first_omitted_norm;
    } else if (study == "laplace_order") {
      const LaplaceProblem problem =
          builtin_laplace_problem(param_string(params, "problem", "x_plus_x2"));
      const TruncationResult trunc = laplace_evaluate(scaled, problem, n_terms);
      const ComplexMatrix oracle = matrix_laplace_quadrature(
          problem.phi_evaluator, problem.h_evaluator, scaled, problem.interval_a,
          problem.interval_infinite() ? -1.0 : problem.interval_b, 1e-14);
      rec.truncation_error = spectral_norm(ComplexMatrix(oracle - trunc.value));
      rec.bound_value = trunc.first_omitted_norm;
    } else if (study == "gamma_bound") {
      const ComplexMatrix star = scaled_gamma(scaled);
      const ComplexMatrix a_inv =
          scaled.fullPivLu().solve(identity_like(scaled));
      const StirlingExpansion st = stirling_coefficients(n_terms);
      ComplexMatrix sum = ComplexMatrix::Zero(base.rows(), base.cols());
      ComplexMatrix power = identity_like(scaled);
      for (int k = 0; k < n_terms; ++k) {
        sum += st.g[k] * power;
        power = ComplexMatrix(power * a_inv);
      }
      rec.truncation_error = spectral_norm(ComplexMatrix(star - sum));
      rec.bound_value = gamma_remainder_bound(scaled, n_terms);
    } else if (study == "bessel_ratio") {
      BesselSpec spec;
      spec.kind = param_string(params, "kind", "J") == "I" ? BesselKind::I
                                                           : BesselKind::J;
      spec.z =
          Complex(param_double(params, "z", 1.0), param_double(params, "zim", 0.0));
      const ComplexMatrix lead = bessel_leading(scaled, spec);
      const ComplexMatrix j = bessel_integral(scaled, spec);
      const ComplexMatrix ratio = lead.fullPivLu().solve(j);
      rec.truncation_error =
          spectral_norm(ComplexMatrix(ratio - identity_like(scaled)));
      rec.bound_value = 0.0;
    } else if (study == "kummer_order") {
      const KummerParams kp{
          Complex(param_double(params, "a", 0.7), param_double(params, "a_im", 0.0)),
          Complex(param_double(params, "b", 1.9), param_double(params, "b_im", 0.0))};
      const TruncationResult trunc = kummer_asymptotic(kp, scaled, n_terms, -1);
      const ComplexMatrix oracle = lift_scalar(
          [&kp](Complex z) { return kummer_scalar_stable(kp.a, kp.b, -z); }, scaled);
      rec.truncation_error = spectral_norm(ComplexMatrix(oracle - trunc.value));
      rec.bound_value = trunc.first_omitted_norm;
    } else {
      raise(ErrorCode::invalid_argument, "unknown sweep study '" + study + "'");
    }
    records.push_back(rec);
  }

  std::vector<double> xs, ys;
  for (const SweepRecord& rec : records) {
    xs.push_back(rec.scale);
    ys.push_back(std::max(rec.truncation_error, 1e-300));
  }
  const double slope = fit_loglog_slope(xs, ys);

  std::ostringstream csv;
  csv << "scale,inv_norm,truncation_error,bound_value,n_terms\n";
  char line[256];
  for (const SweepRecord& rec : records) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%d\n", rec.scale,
                  rec.inv_norm, rec.truncation_error, rec.bound_value, rec.n_terms);
    csv << line;
  }
  std::snprintf(line, sizeof(line), "slope,,%.17g,,\n", slope);
  csv << line;

  if (out.empty()) {
    std::fputs(csv.str().c_str(), stdout);
  } else {
    write_text_file(out, csv.str());
    std::printf("wrote %s (slope %.6g)\n", out.c_str(), slope);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix asymptotics of Laplace integrals"};
  app.require_subcommand(1);

  std::string function, suite, study;
  std::string matrix_path, out_path, params_csv, scales_csv;
  int n_terms = 3;
  std::uint64_t seed = 1;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a matrix function");
  eval->add_option("function", function,
                   "gamma|gamma_stirling|bessel_j|bessel_i|kummer|kummer_asym|"
                   "watson|laplace")
      ->required();
  eval->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  eval->add_option("--terms", n_terms, "number of expansion terms");
  eval->add_option("--params", params_csv, "comma-separated key=value list");
  eval->add_option("--out", out_path, "write result JSON here");

  CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "matcore|expansions|specfun|all")->required();
  verify->add_option("--seed", seed, "generator seed");

  CLI::App* sweep = app.add_subcommand("sweep", "scaling-family study to CSV");
  sweep->add_option("study", study,
                    "watson_order|laplace_order|gamma_bound|bessel_ratio|"
                    "kummer_order")
      ->required();
  sweep->add_option("--matrix", matrix_path, "base matrix JSON file")->required();
  sweep->add_option("--scales", scales_csv, "comma-separated increasing scales")
      ->required();
  sweep->add_option("--terms", n_terms, "number of expansion terms");
  sweep->add_option("--params", params_csv, "comma-separated key=value list");
  sweep->add_option("--out", out_path, "write CSV here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      return run_eval(function, matrix_path, n_terms, params_csv, out_path);
    }
    if (verify->parsed()) {
      return run_verify(suite, seed);
    }
    if (sweep->parsed()) {
      return run_sweep(study, matrix_path, scales_csv, n_terms, params_csv,
                       out_path);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
