#include "matasym/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "matasym/errors.hpp"
#include "matasym/matrix_functions.hpp"
#include "matasym/power_series.hpp"
#include "matasym/scalar_functions.hpp"
#include "matasym/spectral.hpp"

namespace matasym {

namespace {

Complex coefficient_or_zero(const std::vector<Complex>& v, std::size_t k) {
  return k < v.size() ? v[k] : Complex(0.0);
}

ComplexMatrix term_value(const ComplexMatrix& a, const ExpansionTermList::Term& t) {
  if (t.coefficient == Complex(0.0)) {
    return ComplexMatrix::Zero(a.rows(), a.cols());
  }
  return ComplexMatrix(t.coefficient * matrix_power(a, Complex(-t.exponent)));
}

void check_sectorial(const ComplexMatrix& a) {
  if (!(mu_lower_bound(a) > 0.0)) {
    raise(ErrorCode::not_sectorial, "expansion evaluation needs mu(A) > 0");
  }
  const ComplexVector ev = eigenvalues_only(a);
  const double scale = spectral_norm(a);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const Complex lambda = ev(i);
    if (std::abs(lambda) <= 1e-13 * std::max(1.0, scale) ||
        std::abs(std::arg(lambda)) >= 1.5707963267948966) {
      raise(ErrorCode::not_sectorial, "spectrum leaves the open right half-plane");
    }
  }
}

}  // namespace

ExpansionTermList watson_terms(const WatsonInput& input, int n_terms) {
  if (n_terms < 1) raise(ErrorCode::invalid_argument, "n_terms must be >= 1");
  if (!(input.scale > 0.0)) raise(ErrorCode::invalid_argument, "scale r must be > 0");
  ExpansionTermList list;
  list.prefactor_h_at_a = 0.0;
  list.terms.reserve(n_terms);
  for (int n = 1; n <= n_terms; ++n) {
    const double exponent = n / input.scale;
    const Complex a_n = coefficient_or_zero(input.coefficients, n - 1);
    const Complex g = gamma_scalar(Complex(exponent));
    list.terms.push_back({a_n * g, exponent});
  }
  return list;
}

TruncationResult evaluate_expansion(const ComplexMatrix& a,
                                    const ExpansionTermList& terms, int n_terms) {
  if (n_terms < 1) raise(ErrorCode::invalid_argument, "n_terms must be >= 1");
  if (static_cast<std::size_t>(n_terms) > terms.terms.size()) {
    raise(ErrorCode::insufficient_series, "term list shorter than n_terms");
  }
  check_sectorial(a);

  ComplexMatrix sum = ComplexMatrix::Zero(a.rows(), a.cols());
  for (int k = 0; k < n_terms; ++k) sum += term_value(a, terms.terms[k]);

  TruncationResult result;
  result.n_terms = n_terms;
  if (terms.prefactor_h_at_a != 0.0) {
    const ComplexMatrix prefactor =
        matrix_exp(ComplexMatrix(-terms.prefactor_h_at_a * a));
    result.value = prefactor * sum;
    if (static_cast<std::size_t>(n_terms) < terms.terms.size()) {
      result.first_omitted_norm = spectral_norm(
          ComplexMatrix(prefactor * term_value(a, terms.terms[n_terms])));
    }
  } else {
    result.value = sum;
    if (static_cast<std::size_t>(n_terms) < terms.terms.size()) {
      result.first_omitted_norm =
          spectral_norm(term_value(a, terms.terms[n_terms]));
    }
  }
  return result;
}

ExpansionTermList laplace_coefficients(const LaplaceProblem& problem, int n_terms) {
  if (n_terms < 1) raise(ErrorCode::invalid_argument, "n_terms must be >= 1");
  const double mu = problem.h_order;
  const double lambda = problem.phi_order;
  if (!(mu > 0.0) || !(lambda > 0.0)) {
    raise(ErrorCode::invalid_argument, "orders mu and lambda must be positive");
  }
  const std::size_t n = static_cast<std::size_t>(n_terms);
  if (problem.h_coefficients.size() < n || problem.phi_coefficients.size() < n) {
    raise(ErrorCode::insufficient_series,
          "need at least n_terms h and phi ladder coefficients");
  }
  if (!(problem.h_coefficients[0] > 0.0)) {
    raise(ErrorCode::invalid_argument, "leading phase coefficient a_0 must be > 0");
  }

  // Regular factors: h - h(a) = u^mu hs(u), h' = u^{mu-1} hp(u),
  // phi = u^{lambda-1} ps(u).
  Series hs(n), hp(n), ps(n);
  for (std::size_t s = 0; s < n; ++s) {
    hs[s] = Complex(problem.h_coefficients[s]);
    hp[s] = Complex((s + mu) * problem.h_coefficients[s]);
    ps[s] = problem.phi_coefficients[s];
  }

  // v = t^{1/mu} = u hs(u)^{1/mu}; invert for u(v), then
  // phi/h' = v^{lambda-mu} (u/v)^{lambda-mu} ps(u(v)) / hp(u(v)).
  const Series psi = series_pow(hs, Complex(1.0 / mu), n);
  Series v_of_u(n + 1, Complex(0.0));
  for (std::size_t k = 0; k < n; ++k) v_of_u[k + 1] = psi[k];
  const Series u_of_v = series_revert(v_of_u, n);

  Series u_over_v(n, Complex(0.0));
  for (std::size_t k = 0; k < n; ++k) u_over_v[k] = u_of_v[k + 1];

  const Series ratio = series_div(ps, hp, n);
  const Series g = series_mul(series_pow(u_over_v, Complex(lambda - mu), n),
                              series_compose(ratio, u_of_v, n), n);

  ExpansionTermList list;
  list.prefactor_h_at_a = problem.h_at_a;
  list.terms.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    const double exponent = (static_cast<double>(s) + lambda) / mu;
    list.terms.push_back({gamma_scalar(Complex(exponent)) * g[s], exponent});
  }
  return list;
}

namespace {

void sample_phase_hypothesis(const LaplaceProblem& problem) {
  if (!problem.h_evaluator) return;
  const double a = problem.interval_a;
  const double b = problem.interval_infinite() ? a + 1e3
                                               : std::min(problem.interval_b, a + 1e3);
  const double h0 = problem.h_evaluator(a);
  const int samples = 1000;
  for (int i = 1; i <= samples; ++i) {
    const double x = a + (b - a) * i / (samples + 1.0);
    if (!(problem.h_evaluator(x) > h0)) {
      raise(ErrorCode::hypothesis_violated,
            "phase fails h(x) > h(a) on the sampled interval");
    }
  }
}

}  // namespace

TruncationResult laplace_evaluate(const ComplexMatrix& a,
                                  const LaplaceProblem& problem, int n_terms) {
  sample_phase_hypothesis(problem);
  // One extra coefficient feeds the a-posteriori remainder estimate.
  const ExpansionTermList terms = laplace_coefficients(problem, n_terms + 1);
  return evaluate_expansion(a, terms, n_terms);
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    raise(ErrorCode::invalid_argument, "slope fit needs matching sizes >= 2");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double empirical_order(const ComplexMatrix& base, const ExpansionTermList& terms,
                       const std::function<ComplexMatrix(const ComplexMatrix&)>& oracle,
                       const std::vector<double>& scales, int n_terms) {
  if (scales.size() < 4) {
    raise(ErrorCode::invalid_argument, "need at least 4 scales for a slope fit");
  }
  if (!std::is_sorted(scales.begin(), scales.end())) {
    raise(ErrorCode::invalid_argument, "scales must be increasing");
  }

  std::vector<double> remainders;
  std::vector<double> reference;
  remainders.reserve(scales.size());
  for (double s : scales) {
    const ComplexMatrix scaled = s * base;
    ComplexMatrix truth;
    try {
      truth = oracle(scaled);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      raise(ErrorCode::oracle_failure, e.what());
    }
    if (!truth.allFinite()) {
      raise(ErrorCode::oracle_failure, "oracle returned non-finite entries");
    }
    const TruncationResult trunc = evaluate_expansion(scaled, terms, n_terms);
    remainders.push_back(spectral_norm(ComplexMatrix(truth - trunc.value)));
    reference.push_back(spectral_norm(truth));
  }

  // Noise floor: every remainder indistinguishable from oracle noise (the
  // quadrature tolerance sits at 1e-12) -> the expansion is exact here,
  // report the -inf sentinel.
  bool all_noise = true;
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    if (remainders[i] > 1e-10 * std::max(reference[i], 1e-300) + 1e-13) {
      all_noise = false;
      break;
    }
  }
  if (all_noise) return -std::numeric_limits<double>::infinity();

  return fit_loglog_slope(scales, remainders);
}

WatsonInput builtin_watson_input(const std::string& id, int max_terms) {
  WatsonInput input;
  input.evaluator_id = id;
  if (id == "reciprocal_1p") {
    // f(t) = 1/(1+t) = sum (-1)^{n-1} t^{n-1}, r = 1.
    input.scale = 1.0;
    input.radius = 0.9;
    input.growth_m0 = 1.0;
    input.growth_b = 0.0;
    input.coefficients.resize(max_terms);
    for (int n = 1; n <= max_terms; ++n) {
      input.coefficients[n - 1] = Complex((n % 2 == 1) ? 1.0 : -1.0);
    }
    input.evaluator = [](double t) { return Complex(1.0 / (1.0 + t)); };
    return input;
  }
  if (id == "inv_sqrt") {
    // f(t) = t^{-1/2}: r = 2, a_1 = 1, expansion exact.
    input.scale = 2.0;
    input.radius = 1.0;
    input.growth_m0 = 1.0;
    input.growth_b = 0.0;
    input.coefficients.assign(max_terms, Complex(0.0));
    input.coefficients[0] = Complex(1.0);
    input.evaluator = [](double t) { return Complex(1.0 / std::sqrt(t)); };
    return input;
  }
  raise(ErrorCode::invalid_argument, "unknown Watson evaluator id '" + id + "'");
}

LaplaceProblem builtin_laplace_problem(const std::string& id, int max_terms) {
  LaplaceProblem problem;
  problem.evaluator_id = id;
  problem.interval_a = 0.0;
  problem.interval_b = -1.0;  // infinite
  problem.phi_order = 1.0;
  problem.phi_coefficients.assign(max_terms, Complex(0.0));
  problem.phi_coefficients[0] = Complex(1.0);
  problem.phi_evaluator = [](double) { return Complex(1.0); };
  problem.h_coefficients.assign(max_terms, 0.0);
  if (id == "gaussian") {
    // h(x) = x^2: mu = 2, a_0 = 1.
    problem.h_order = 2.0;
    problem.h_coefficients[0] = 1.0;
    problem.h_evaluator = [](double x) { return x * x; };
    return problem;
  }
  if (id == "x_plus_x2") {
    // h(x) = x + x^2: mu = 1, a_0 = a_1 = 1.
    problem.h_order = 1.0;
    problem.h_coefficients[0] = 1.0;
    problem.h_coefficients[1] = 1.0;
    problem.h_evaluator = [](double x) { return x + x * x; };
    return problem;
  }
  raise(ErrorCode::invalid_argument, "unknown Laplace evaluator id '" + id + "'");
}

}  // namespace matasym
