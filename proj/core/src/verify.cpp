#include "matasym/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "matasym/eigensystem.hpp"
#include "matasym/errors.hpp"
#include "matasym/expansions.hpp"
#include "matasym/matrix_functions.hpp"
#include "matasym/oracle.hpp"
#include "matasym/scalar_functions.hpp"
#include "matasym/specfun.hpp"
#include "matasym/spectral.hpp"

namespace matasym {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Upper-bound style check: pass iff measured <= tolerance.
CheckResult upper(const std::string& name, double measured, double tolerance) {
  return {name, measured <= tolerance, measured, tolerance};
}

// Interval check: pass iff lo <= measured <= hi; tolerance column reports hi.
CheckResult window(const std::string& name, double measured, double lo, double hi) {
  return {name, measured >= lo && measured <= hi, measured, hi};
}

MatrixFamily hermitian_family(std::uint64_t seed, int dim = 4, double lo = 1.0,
                              double hi = 20.0) {
  MatrixFamily fam;
  fam.kind = FamilyKind::hermitian_pd;
  fam.dim = dim;
  fam.radius_min = lo;
  fam.radius_max = hi;
  fam.seed = seed;
  return fam;
}

MatrixFamily normal_family(std::uint64_t seed, int dim = 4, double lo = 1.0,
                           double hi = 10.0, double max_angle = kPi / 4.0) {
  MatrixFamily fam;
  fam.kind = FamilyKind::normal_sectorial;
  fam.dim = dim;
  fam.radius_min = lo;
  fam.radius_max = hi;
  fam.max_angle = max_angle;
  fam.seed = seed;
  return fam;
}

MatrixFamily conditioned_family(std::uint64_t seed, int dim = 4, double np = 5.0) {
  MatrixFamily fam;
  fam.kind = FamilyKind::diagonalizable_conditioned;
  fam.dim = dim;
  fam.radius_min = 1.0;
  fam.radius_max = 5.0;
  fam.max_angle = kPi / 4.0;
  fam.target_np = np;
  fam.seed = seed;
  return fam;
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return ComplexMatrix(a - b).cwiseAbs().maxCoeff();
}

double relative_diff(const ComplexMatrix& got, const ComplexMatrix& want) {
  const double scale = spectral_norm(want);
  return spectral_norm(ComplexMatrix(got - want)) / std::max(scale, 1e-300);
}

}  // namespace

std::vector<CheckResult> verify_matcore(std::uint64_t seed) {
  std::vector<CheckResult> results;

  const auto hermitians = generate(hermitian_family(seed), 100);
  const auto normals = generate(normal_family(seed + 1), 100);
  const auto conditioned = generate(conditioned_family(seed + 2), 30);
  const double family_delta = normal_family(seed + 1).delta();

  const std::vector<double> times = {0.1, 0.3, 1.0, 2.0, 4.0, 7.0, 10.0};

  // ||e^{-tA}|| <= e^{-t mu(A)} for every matrix, any t >= 0.
  {
    double worst_gap = -1e300;
    double worst_hermitian_rel = 0.0;
    auto sweep = [&](const std::vector<ComplexMatrix>& batch, bool hermitian) {
      for (const ComplexMatrix& a : batch) {
        const double mu = mu_lower_bound(a);
        for (double t : times) {
          const double norm = spectral_norm(matrix_exp(ComplexMatrix(-t * a)));
          const double envelope = std::exp(-t * mu);
          worst_gap = std::max(worst_gap, norm - envelope);
          if (hermitian && envelope > 0.0) {
            worst_hermitian_rel =
                std::max(worst_hermitian_rel, std::abs(norm / envelope - 1.0));
          }
        }
      }
    };
    sweep(hermitians, true);
    sweep(normals, false);
    sweep(conditioned, false);
    results.push_back(upper("semigroup_norm_bound", worst_gap, 1e-10));
    results.push_back(
        upper("semigroup_equality_hermitian", worst_hermitian_rel, 1e-10));
  }

  // mu(A) >= ||A^{-1}||^{-1} sin(Delta) for normal sectorial matrices.
  {
    double worst = 1e300;
    for (const ComplexMatrix& a : normals) {
      const double mu = mu_lower_bound(a);
      const double floor_mu =
          smallest_singular_value(a) * std::sin(family_delta);
      worst = std::min(worst, mu - floor_mu);
    }
    results.push_back(window("mu_sector_estimate", worst, -1e-10, 1e300));
  }

  // Eigenvalues of the Hermitian part match Re(lambda) for normal matrices.
  {
    double worst = 0.0;
    for (const ComplexMatrix& a : normals) {
      std::vector<double> re;
      const ComplexVector ev = eigenvalues_only(a);
      for (Eigen::Index i = 0; i < ev.size(); ++i) re.push_back(ev(i).real());
      std::sort(re.begin(), re.end());
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(a),
                                                      Eigen::EigenvaluesOnly);
      for (std::size_t i = 0; i < re.size(); ++i) {
        worst = std::max(worst, std::abs(es.eigenvalues()(i) - re[i]));
      }
    }
    results.push_back(upper("hermitian_part_eigenvalue_identity", worst, 1e-10));
  }

  // ||A^{it}|| <= e^{(pi/2 - Delta)|t|} on the certified sector.
  {
    double worst = -1e300;
    const std::vector<double> powers = {-20.0, -10.0, -3.0, -0.5, 0.5, 3.0, 10.0, 20.0};
    for (const ComplexMatrix& a : normals) {
      for (double t : powers) {
        const double norm =
            spectral_norm(matrix_power(a, Complex(0.0, t)));
        worst = std::max(
            worst, norm - std::exp((kPi / 2.0 - family_delta) * std::abs(t)));
      }
    }
    results.push_back(upper("imaginary_power_bound", worst, 1e-10));
  }

  // ||A^{-r}|| = ||A^{-1}||^r for normal matrices (C_r = 1).
  {
    double worst = 0.0;
    for (const ComplexMatrix& a : normals) {
      const double inv_norm = 1.0 / smallest_singular_value(a);
      for (double r : {0.5, 1.5, 2.5}) {
        const double lhs = spectral_norm(matrix_power(a, Complex(-r)));
        const double rhs = std::pow(inv_norm, r);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
      }
    }
    results.push_back(upper("normal_moment_equality", worst, 1e-10));
  }

  // Resolvent power bound with M = 1 on the Hermitian family.
  {
    double worst = 0.0;
    for (const ComplexMatrix& a : hermitians) {
      const double omega1 = 0.995 * omega_min_real(a);
      const std::vector<double> grid = {omega1 - 0.5, omega1 - 1.0, omega1 - 2.0,
                                        omega1 - 5.0, 0.0};
      const ResolventBoundReport report =
          sample_resolvent_bound(a, 1.0, omega1, grid, 6);
      worst = std::max(worst, report.worst_ratio);
      if (!report.passed) worst = std::max(worst, 2.0);
    }
    results.push_back(upper("resolvent_power_bound_hermitian", worst, 1.0));
  }

  // Quadrature route for A^{-alpha} against exp(-alpha log A).
  {
    double worst = 0.0;
    const auto small = generate(hermitian_family(seed + 3, 4, 0.5, 10.0), 10);
    for (const ComplexMatrix& a : small) {
      for (double alpha : {0.5, 1.0, 2.5}) {
        const ComplexMatrix via_integral = matrix_power_integral(a, alpha);
        const ComplexMatrix via_log = matrix_power(a, Complex(-alpha));
        worst = std::max(worst, relative_diff(via_integral, via_log));
      }
    }
    results.push_back(upper("power_integral_cross_method", worst, 1e-8));
  }

  // lift_scalar(exp(-z)) agrees with matrix_exp(-A) on all families.
  {
    double worst = 0.0;
    auto sweep = [&](const std::vector<ComplexMatrix>& batch) {
      for (const ComplexMatrix& a : batch) {
        const ComplexMatrix lifted =
            lift_scalar([](Complex z) { return std::exp(-z); }, a);
        worst = std::max(worst, relative_diff(lifted, matrix_exp(ComplexMatrix(-a))));
      }
    };
    sweep(hermitians);
    sweep(normals);
    sweep(conditioned);
    results.push_back(upper("lift_exp_consistency", worst, 1e-10));
  }

  // eta = mu/omega = 1 on Hermitian and normal families.
  {
    double worst = 0.0;
    for (const auto* batch : {&hermitians, &normals}) {
      for (const ComplexMatrix& a : *batch) {
        const SpectralProfile profile = spectral_profile(a);
        worst = std::max(worst, std::abs(profile.eta - 1.0));
      }
    }
    results.push_back(upper("family_eta_certificate", worst, 1e-10));
  }

  // Conditioned family hits its target n_p within 20%.
  {
    double worst = 0.0;
    const double target = conditioned_family(seed + 2).target_np;
    for (const ComplexMatrix& a : conditioned) {
      const double np = spectral_profile(a).n_p;
      worst = std::max(worst, std::abs(np / target - 1.0));
    }
    results.push_back(upper("conditioned_family_np_window", worst, 0.2));
  }

  // Same seed, same bytes.
  {
    const auto again = generate(hermitian_family(seed), 100);
    double diff = 0.0;
    for (std::size_t i = 0; i < again.size(); ++i) {
      diff = std::max(diff, max_entry_diff(hermitians[i], again[i]));
    }
    results.push_back(upper("generator_determinism", diff, 0.0));
  }

  return results;
}

std::vector<CheckResult> verify_expansions(std::uint64_t seed) {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(seed * 2654435761u + 17);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };

  // Leading Laplace coefficient against Gamma(lambda/mu) b0 mu^{-1} a0^{-lambda/mu}.
  {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      LaplaceProblem problem;
      problem.h_order = uniform(0.4, 2.5);
      problem.phi_order = uniform(0.3, 2.8);
      const int len = 6;
      problem.h_coefficients.resize(len);
      problem.phi_coefficients.resize(len);
      problem.h_coefficients[0] = uniform(0.3, 3.0);
      problem.phi_coefficients[0] = Complex(uniform(-2.0, 2.0), uniform(-2.0, 2.0));
      if (std::abs(problem.phi_coefficients[0]) < 0.1) {
        problem.phi_coefficients[0] += Complex(0.5, 0.0);
      }
      for (int s = 1; s < len; ++s) {
        problem.h_coefficients[s] = uniform(-1.0, 1.0);
        problem.phi_coefficients[s] = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
      }
      const ExpansionTermList terms = laplace_coefficients(problem, 4);
      const double mu = problem.h_order;
      const double lambda = problem.phi_order;
      const Complex expected = gamma_scalar(Complex(lambda / mu)) *
                               problem.phi_coefficients[0] / mu *
                               std::pow(Complex(problem.h_coefficients[0]),
                                        Complex(-lambda / mu));
      worst = std::max(worst, std::abs(terms.terms[0].coefficient - expected) /
                                  std::abs(expected));
    }
    results.push_back(upper("laplace_c0_identity", worst, 1e-12));
  }

  // Reversion round-trip: h(a + u(v)) - h(a) == v^mu through the kept order.
  {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 8;
      const double mu = uniform(0.4, 2.6);
      Series hs(n);
      hs[0] = Complex(uniform(0.5, 2.0));
      for (std::size_t s = 1; s < n; ++s) hs[s] = Complex(uniform(-1.0, 1.0));

      const Series psi = series_pow(hs, Complex(1.0 / mu), n);
      Series v_of_u(n + 1, Complex(0.0));
      for (std::size_t k = 0; k < n; ++k) v_of_u[k + 1] = psi[k];
      const Series u_of_v = series_revert(v_of_u, n);
      Series u_over_v(n, Complex(0.0));
      for (std::size_t k = 0; k < n; ++k) u_over_v[k] = u_of_v[k + 1];

      // (u/v)^mu * hs(u(v)) should collapse to the constant series 1.
      const Series round_trip =
          series_mul(series_pow(u_over_v, Complex(mu), n),
                     series_compose(hs, u_of_v, n), n);
      worst = std::max(worst, std::abs(round_trip[0] - Complex(1.0)));
      for (std::size_t k = 1; k < n; ++k) {
        worst = std::max(worst, std::abs(round_trip[k]));
      }
    }
    results.push_back(upper("reversion_round_trip", worst, 1e-10));
  }

  // Watson remainder order for f = 1/(1+t) on a scaling family.
  {
    const WatsonInput input = builtin_watson_input("reciprocal_1p");
    const auto base = generate(normal_family(seed + 11, 4, 1.0, 2.0), 1)[0];
    const std::vector<double> scales = {10.0, 30.0, 100.0, 300.0, 1000.0};
    auto oracle = [&input](const ComplexMatrix& m) {
      return matrix_laplace_quadrature(input.evaluator, m, 0.0, -1.0,
                                       input.growth_b, input.growth_m0, 1e-14);
    };
    bool ok = true;
    double reported = 0.0;
    for (int n : {2, 3}) {
      const ExpansionTermList terms = watson_terms(input, n + 1);
      const double slope = empirical_order(base, terms, oracle, scales, n);
      reported = slope;
      const double target = -(n + 1.0);
      if (std::abs(slope - target) > 0.2) ok = false;
    }
    results.push_back({"watson_remainder_order", ok, reported, 0.2});
  }

  // Tail of a split Laplace integral decays exponentially in the scale.
  {
    const LaplaceProblem problem = builtin_laplace_problem("x_plus_x2");
    const auto base = generate(normal_family(seed + 12, 3, 1.0, 2.0), 1)[0];
    const double cut = 0.05;
    std::vector<double> scales = {10.0, 20.0, 40.0, 80.0, 140.0, 200.0};
    std::vector<double> tail_norms;
    for (double s : scales) {
      const ComplexMatrix tail = matrix_laplace_quadrature(
          problem.phi_evaluator, problem.h_evaluator, ComplexMatrix(s * base), cut,
          -1.0, 1e-14);
      tail_norms.push_back(spectral_norm(tail));
    }
    // log tail vs scale: fitted line must slope down; theoretical rate is
    // h(cut) * mu(base).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
      sx += scales[i];
      sy += std::log(tail_norms[i]);
      sxx += scales[i] * scales[i];
      sxy += scales[i] * std::log(tail_norms[i]);
    }
    const double n = static_cast<double>(scales.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double expected_rate =
        -(problem.h_evaluator(cut)) * mu_lower_bound(base);
    results.push_back(
        window("laplace_tail_exponential_decay", slope, 2.0 * expected_rate,
               0.5 * expected_rate));
  }

  // Shifting h by kappa multiplies the evaluation by exp(-kappa A).
  {
    double worst = 0.0;
    const auto a = generate(hermitian_family(seed + 13, 3, 1.0, 6.0), 1)[0];
    for (double kappa : {0.3, 1.0, 2.5}) {
      LaplaceProblem problem = builtin_laplace_problem("x_plus_x2");
      const TruncationResult plain = laplace_evaluate(a, problem, 3);
      problem.h_at_a += kappa;
      const TruncationResult shifted = laplace_evaluate(a, problem, 3);
      const ComplexMatrix expected =
          matrix_exp(ComplexMatrix(-kappa * a)) * plain.value;
      worst = std::max(worst, relative_diff(shifted.value, expected));
    }
    results.push_back(upper("prefactor_shift_exactness", worst, 1e-12));
  }

  return results;
}

std::vector<CheckResult> verify_specfun(std::uint64_t seed) {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 3);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
  };

  // Gamma(A + I) = A Gamma(A).
  {
    double worst = 0.0;
    const auto batch = generate(hermitian_family(seed + 21, 4, 1.0, 20.0), 25);
    for (const ComplexMatrix& a : batch) {
      const ComplexMatrix lhs = gamma_matrix(ComplexMatrix(a + identity_like(a)));
      const ComplexMatrix rhs = a * gamma_matrix(a);
      worst = std::max(worst, relative_diff(lhs, rhs));
    }
    results.push_back(upper("gamma_functional_equation", worst, 1e-9));
  }

  // Hermitian remainder bound: ||Gamma*(A) - sum g_k A^{-k}|| <= bound.
  {
    double worst_ratio = 0.0;
    const auto batch = generate(hermitian_family(seed + 22, 4, 5.0, 100.0), 50);
    for (const ComplexMatrix& a : batch) {
      const ComplexMatrix star = scaled_gamma(a);
      const ComplexMatrix a_inv = a.fullPivLu().solve(identity_like(a));
      for (int n = 1; n <= 4; ++n) {
        const StirlingExpansion st = stirling_coefficients(n);
        ComplexMatrix sum = ComplexMatrix::Zero(a.rows(), a.cols());
        ComplexMatrix power = identity_like(a);
        for (int k = 0; k < n; ++k) {
          sum += st.g[k] * power;
          power = ComplexMatrix(power * a_inv);
        }
        const double measured = spectral_norm(ComplexMatrix(star - sum));
        const double bound = gamma_remainder_bound(a, n);
        if (std::isinf(bound)) continue;  // N = 1: vacuous
        worst_ratio = std::max(worst_ratio, measured / bound);
      }
    }
    results.push_back(upper("gamma_remainder_bound_family", worst_ratio, 1.0));
  }

  // Cross-method: quadrature gamma against the lifted scalar gamma.
  {
    double worst = 0.0;
    const auto batch = generate(hermitian_family(seed + 23, 3, 1.0, 5.0), 10);
    for (const ComplexMatrix& a : batch) {
      worst = std::max(worst, relative_diff(gamma_integral(a), gamma_matrix(a)));
    }
    results.push_back(upper("gamma_integral_cross_method", worst, 1e-8));
  }

  // Reciprocal gamma is independent of the shift count.
  {
    double worst = 0.0;
    const auto batch = generate(hermitian_family(seed + 24, 3, 1.0, 5.0), 10);
    for (const ComplexMatrix& a : batch) {
      const ComplexMatrix two = reciprocal_gamma(a, 2);
      const ComplexMatrix three = reciprocal_gamma(a, 3);
      worst = std::max(worst, relative_diff(two, three));
      // And it inverts gamma_matrix on right-spectrum matrices.
      const ComplexMatrix product = two * gamma_matrix(a);
      worst = std::max(
          worst, spectral_norm(ComplexMatrix(product - identity_like(a))));
    }
    results.push_back(upper("reciprocal_gamma_shift_independence", worst, 1e-10));
  }

  // Diagonal inputs reproduce the scalar evaluations entrywise.
  {
    double worst = 0.0;
    {
      ComplexMatrix d = ComplexMatrix::Zero(3, 3);
      d(0, 0) = Complex(1.5);
      d(1, 1) = Complex(4.0);
      d(2, 2) = Complex(2.0, 0.5);
      ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
      for (int i = 0; i < 3; ++i) expected(i, i) = gamma_scalar(d(i, i));
      worst = std::max(worst, relative_diff(gamma_matrix(d), expected));
      for (int i = 0; i < 3; ++i) {
        expected(i, i) = scaled_gamma_scalar(d(i, i) + 4.0);
      }
      worst = std::max(worst,
                       relative_diff(scaled_gamma(ComplexMatrix(
                                         d + 4.0 * identity_like(d))),
                                     expected));
    }
    {
      ComplexMatrix d = ComplexMatrix::Zero(3, 3);
      d(0, 0) = Complex(0.5);
      d(1, 1) = Complex(1.5);
      d(2, 2) = Complex(3.0);
      BesselSpec spec_j{BesselKind::J, Complex(1.2)};
      BesselSpec spec_i{BesselKind::I, Complex(1.0)};
      ComplexMatrix expected_j = ComplexMatrix::Zero(3, 3);
      ComplexMatrix expected_i = ComplexMatrix::Zero(3, 3);
      for (int i = 0; i < 3; ++i) {
        expected_j(i, i) = bessel_j_series(d(i, i), spec_j.z);
        expected_i(i, i) = bessel_i_series(d(i, i), spec_i.z);
      }
      worst = std::max(worst, relative_diff(bessel_integral(d, spec_j), expected_j));
      worst = std::max(worst, relative_diff(bessel_integral(d, spec_i), expected_i));
    }
    {
      ComplexMatrix d = ComplexMatrix::Zero(2, 2);
      d(0, 0) = Complex(30.0);
      d(1, 1) = Complex(40.0);
      BesselSpec spec{BesselKind::J, Complex(1.0)};
      ComplexMatrix lead = ComplexMatrix::Zero(2, 2);
      ComplexMatrix asym = ComplexMatrix::Zero(2, 2);
      for (int i = 0; i < 2; ++i) {
        const Complex nu = d(i, i);
        lead(i, i) = std::pow(0.5 * spec.z, nu) / gamma_scalar(nu + 0.5) *
                     std::pow(nu - 0.5, Complex(-0.5));
        asym(i, i) = std::pow(0.5 * std::exp(1.0) * spec.z, nu) *
                     std::pow(nu, -nu - 0.5) / std::sqrt(2.0 * kPi);
      }
      worst = std::max(worst, relative_diff(bessel_leading(d, spec), lead));
      worst = std::max(worst, relative_diff(bessel_asymptotic(d, spec), asym));
    }
    {
      ComplexMatrix d = ComplexMatrix::Zero(2, 2);
      d(0, 0) = Complex(1.0);
      d(1, 1) = Complex(-2.5);
      const KummerParams params{Complex(0.7), Complex(1.9)};
      ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
      for (int i = 0; i < 2; ++i) {
        expected(i, i) = kummer_scalar(params.a, params.b, d(i, i));
      }
      worst = std::max(worst, relative_diff(kummer_series(params, d), expected));
    }
    {
      ComplexMatrix d = ComplexMatrix::Zero(2, 2);
      d(0, 0) = Complex(5.0);
      d(1, 1) = Complex(8.0);
      const KummerParams params{Complex(0.5), Complex(1.5)};
      ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
      for (int i = 0; i < 2; ++i) {
        expected(i, i) = gamma_ratio(params.a, params.b) *
                         kummer_scalar_stable(params.a, params.b, -d(i, i));
      }
      worst =
          std::max(worst, relative_diff(kummer_mellin_barnes(params, d), expected));
    }
    results.push_back(upper("diagonal_scalar_lifting", worst, 1e-9));
  }

  // Kummer first formula residual across random draws.
  {
    double worst = 0.0;
    const auto batch = generate(normal_family(seed + 25, 3, 0.5, 3.0), 34);
    int draws = 0;
    while (draws < 100) {
      for (const ComplexMatrix& a : batch) {
        const KummerParams params{Complex(uniform(0.2, 2.5), uniform(-0.5, 0.5)),
                                  Complex(uniform(0.6, 3.0), uniform(-0.3, 0.3))};
        const ComplexMatrix scaled = uniform(0.2, 1.0) * a;
        const double residual = kummer_first_formula_residual(params, scaled);
        const double scale = spectral_norm(kummer_series(params, scaled));
        worst = std::max(worst, residual / scale);
        if (++draws >= 100) break;
      }
    }
    results.push_back(upper("kummer_first_formula_residual", worst, 1e-10));
  }

  // Scaled-domain Stirling error: slope -N on a doubling family, and the
  // error is monotone decreasing.
  {
    const auto base = generate(hermitian_family(seed + 26, 3, 0.5, 1.0), 1)[0];
    const std::vector<double> scales = {8, 16, 32, 64, 128, 256};
    bool ok = true;
    double reported = 0.0;
    for (int n : {2, 3}) {
      std::vector<double> errors;
      for (double s : scales) {
        const ComplexMatrix scaled = s * base;
        const ComplexMatrix star = scaled_gamma(scaled);
        const ComplexMatrix a_inv =
            scaled.fullPivLu().solve(identity_like(scaled));
        const StirlingExpansion st = stirling_coefficients(n);
        ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
        ComplexMatrix power = identity_like(scaled);
        for (int k = 0; k < n; ++k) {
          sum += st.g[k] * power;
          power = ComplexMatrix(power * a_inv);
        }
        errors.push_back(spectral_norm(ComplexMatrix(star - sum)));
      }
      for (std::size_t i = 1; i < errors.size(); ++i) {
        if (errors[i] >= errors[i - 1]) ok = false;
      }
      const double slope = fit_loglog_slope(scales, errors);
      reported = slope;
      if (std::abs(slope + n) > 0.3) ok = false;
    }
    results.push_back({"stirling_error_order", ok, reported, 0.3});
  }

  // bessel_asymptotic / bessel_leading ratio approaches I along the family.
  {
    ComplexMatrix base = ComplexMatrix::Zero(3, 3);
    base(0, 0) = Complex(1.0);
    base(1, 1) = Complex(1.35);
    base(2, 2) = Complex(1.7);
    const BesselSpec spec{BesselKind::J, Complex(1.0)};
    auto deviation = [&](double s) {
      const ComplexMatrix scaled = s * base;
      const ComplexMatrix lead = bessel_leading(scaled, spec);
      const ComplexMatrix asym = bessel_asymptotic(scaled, spec);
      const ComplexMatrix ratio = lead.fullPivLu().solve(asym);
      return spectral_norm(ComplexMatrix(ratio - identity_like(base)));
    };
    const double at8 = deviation(8.0);
    const double at64 = deviation(64.0);
    results.push_back(upper("bessel_stirling_ratio_shrinks", at64, at8));
  }

  return results;
}

std::vector<CheckResult> verify_all(std::uint64_t seed) {
  std::vector<CheckResult> all = verify_matcore(seed);
  const auto exp_results = verify_expansions(seed);
  const auto sf_results = verify_specfun(seed);
  all.insert(all.end(), exp_results.begin(), exp_results.end());
  all.insert(all.end(), sf_results.begin(), sf_results.end());
  return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace matasym
