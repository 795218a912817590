#ifndef MATASYM_EXPANSIONS_HPP
#define MATASYM_EXPANSIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "matasym/matrix.hpp"

namespace matasym {

// Scalar amplitude f(t) = sum_{n>=1} a_n t^{n/r - 1} near 0, locally
// integrable on [0, inf) with |f(t)| <= m0 e^{b t} past the radius of the
// series. `evaluator` feeds the quadrature oracle; `evaluator_id` names a
// built-in so problems can round-trip through JSON.
struct WatsonInput {
  std::vector<Complex> coefficients;  // a_1, a_2, ... (index n-1)
  double scale = 1.0;                 // r
  double radius = 1.0;                // c + delta
  double growth_m0 = 1.0;
  double growth_b = 0.0;
  std::function<Complex(double)> evaluator;
  std::string evaluator_id;
};

// Laplace phase/amplitude pair on (a, b):
//   h(x) ~ h(a) + sum a_s (x-a)^{s+mu},  phi(x) ~ sum b_s (x-a)^{s+lambda-1}.
struct LaplaceProblem {
  std::vector<double> h_coefficients;   // a_0, a_1, ...
  double h_order = 1.0;                 // mu > 0
  double h_at_a = 0.0;
  std::vector<Complex> phi_coefficients;  // b_0, b_1, ...
  double phi_order = 1.0;               // lambda > 0
  double interval_a = 0.0;
  double interval_b = -1.0;             // < a means +inf
  std::function<double(double)> h_evaluator;
  std::function<Complex(double)> phi_evaluator;
  std::string evaluator_id;

  bool interval_infinite() const { return interval_b < interval_a; }
};

// Terms (coefficient, exponent) meaning coefficient * A^{-exponent}, with
// exp(-prefactor_h_at_a * A) applied on the left when evaluated.
struct ExpansionTermList {
  struct Term {
    Complex coefficient;
    double exponent;
  };
  std::vector<Term> terms;
  double prefactor_h_at_a = 0.0;
};

struct TruncationResult {
  ComplexMatrix value;
  int n_terms = 0;
  double first_omitted_norm = 0.0;  // a-posteriori remainder estimate
};

// Term n of the transform expansion: (a_n Gamma(n/r), n/r), n = 1..n_terms.
// Coefficients beyond the supplied list count as zero.
ExpansionTermList watson_terms(const WatsonInput& input, int n_terms);

// exp(-h(a) A) * sum_{k < n_terms} c_k A^{-e_k}; the first omitted norm is
// the next term's norm (prefactor included) when the list carries one.
TruncationResult evaluate_expansion(const ComplexMatrix& a,
                                    const ExpansionTermList& terms, int n_terms);

// Coefficients c_s of phi/h' = sum c_s t^{(s+lambda-mu)/mu} by power-series
// reversion in v = t^{1/mu}; term s is (Gamma((s+lambda)/mu) c_s,
// (s+lambda)/mu). Throws InsufficientSeries when the problem supplies
// fewer than n_terms ladder coefficients.
ExpansionTermList laplace_coefficients(const LaplaceProblem& problem, int n_terms);

// laplace_coefficients followed by evaluate_expansion (one extra term is
// requested for the remainder estimate). Samples hypothesis h > h(a).
TruncationResult laplace_evaluate(const ComplexMatrix& a,
                                  const LaplaceProblem& problem, int n_terms);

// Least-squares log-log slope of ||oracle(sA) - truncation(sA)|| over the
// scale sweep; -inf when every remainder sits at the noise floor.
double empirical_order(const ComplexMatrix& base, const ExpansionTermList& terms,
                       const std::function<ComplexMatrix(const ComplexMatrix&)>& oracle,
                       const std::vector<double>& scales, int n_terms);

// Built-in problems addressable from JSON and the CLI.
WatsonInput builtin_watson_input(const std::string& id, int max_terms = 24);
LaplaceProblem builtin_laplace_problem(const std::string& id, int max_terms = 24);

// Fit slope of log(y) against log(x) by least squares.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace matasym

#endif  // MATASYM_EXPANSIONS_HPP
