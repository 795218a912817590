#include "matasym/specfun.hpp"

#include <array>
#include <cmath>

#include "matasym/eigensystem.hpp"
#include "matasym/errors.hpp"
#include "matasym/matrix_functions.hpp"
#include "matasym/power_series.hpp"
#include "matasym/quadrature.hpp"
#include "matasym/spectral.hpp"

namespace matasym {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Even Bernoulli numbers B_2 .. B_30.
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0};

void require_right_spectrum(const ComplexVector& ev, double scale) {
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (!(ev(i).real() > 1e-13 * std::max(1.0, scale))) {
      raise(ErrorCode::spectrum_not_right,
            "gamma needs every eigenvalue in the open right half-plane");
    }
  }
}

void validate_bessel_spec(const BesselSpec& spec) {
  if (spec.z == Complex(0.0)) {
    raise(ErrorCode::sector_violation, "Bessel argument z must be nonzero");
  }
  const double limit = spec.kind == BesselKind::J ? kPi : kPi / 2.0;
  if (!(std::abs(std::arg(spec.z)) < limit)) {
    raise(ErrorCode::sector_violation, "Bessel argument z outside its sector");
  }
}

void require_positive_sector_margin(const ComplexMatrix& a, ErrorCode code) {
  const ComplexVector ev = eigenvalues_only(a);
  const double scale = spectral_norm(a);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= 1e-13 * std::max(1.0, scale) ||
        std::abs(std::arg(ev(i))) >= kPi / 2.0) {
      raise(code, "spectrum leaves the open right half-plane sector");
    }
  }
}

ComplexMatrix matrix_inverse(const ComplexMatrix& a, ErrorCode code,
                             const char* what) {
  Eigen::FullPivLU<ComplexMatrix> lu(a);
  if (!lu.isInvertible()) raise(code, what);
  return lu.solve(identity_like(a));
}

}  // namespace

ComplexMatrix gamma_matrix(const ComplexMatrix& a) {
  const EigenSystem es = eigensystem(a);
  require_right_spectrum(es.values, spectral_norm(a));
  return apply_spectral_function(es, [](Complex z) { return gamma_scalar(z); });
}

ComplexMatrix gamma_integral(const ComplexMatrix& a) {
  const double omega = omega_min_real(a);
  if (!(omega > 0.0)) {
    raise(ErrorCode::not_convergent, "gamma integral needs omega(A) > 0");
  }

  MatrixIntegrand integrand = [&a](double t) {
    return ComplexMatrix(std::exp(-t) * scalar_base_power(t, a));
  };

  QuadratureOptions opts;
  opts.abs_tol = 1e-13;

  // Head (0,1) under t = u^m so entries t^{lambda-1} with small lambda stay
  // integrable; tail cut where the norm envelope dies.
  const int m = std::clamp(static_cast<int>(std::ceil(2.0 / omega)), 2, 8);
  ComplexMatrix result =
      integrate_adaptive(substitute_power(integrand, 0.0, m), 0.0, 1.0, opts);

  const double nu = [&a] {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(a),
                                                    Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff() - 1.0;
  }();
  const double peak = nu > 0.0 ? std::exp(nu * std::log(nu) - nu) : 1.0;
  const double tail_end = tail_cutoff(
      [nu](double t) { return std::exp(nu * std::log(t) - t); }, 1e-16 * peak,
      std::max(2.0 * std::abs(nu), 20.0));
  result += integrate_adaptive(integrand, 1.0, tail_end, opts);
  return result;
}

ComplexMatrix reciprocal_gamma(const ComplexMatrix& a, int n_shift) {
  if (n_shift < 0) raise(ErrorCode::invalid_argument, "n_shift must be >= 0");
  const ComplexMatrix eye = identity_like(a);
  const double scale = spectral_norm(a);
  const ComplexVector ev = eigenvalues_only(a);
  for (int k = 0; k < n_shift; ++k) {
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (std::abs(ev(i) + Complex(k, 0)) <= 1e-12 * std::max(1.0, scale)) {
        raise(ErrorCode::singular_shift, "A + kI singular along the shift");
      }
    }
  }
  const ComplexMatrix shifted = a + static_cast<double>(n_shift) * eye;
  if (!(omega_min_real(shifted) > 0.0)) {
    raise(ErrorCode::singular_shift, "omega(A + n I) must be positive");
  }
  ComplexMatrix product = eye;
  for (int k = 0; k < n_shift; ++k) {
    product = ComplexMatrix(product * (a + static_cast<double>(k) * eye));
  }
  const ComplexMatrix gamma_shifted = gamma_matrix(shifted);
  return ComplexMatrix(
      product *
      matrix_inverse(gamma_shifted, ErrorCode::singular_shift,
                     "Gamma(A + nI) numerically singular"));
}

StirlingExpansion stirling_coefficients(int n_terms) {
  if (n_terms < 1) raise(ErrorCode::invalid_argument, "n_terms must be >= 1");
  if (n_terms > 16) {
    raise(ErrorCode::invalid_argument,
          "stirling_coefficients supports at most 16 terms");
  }
  // Gamma*(z) = exp(sum_n B_{2n} / (2n (2n-1)) z^{1-2n}); expand the
  // exponential of the Bernoulli series in x = 1/z.
  const std::size_t order = 2 * kBernoulliEven.size();
  Series s(order, Complex(0.0));
  for (std::size_t n = 1; n <= kBernoulliEven.size(); ++n) {
    s[2 * n - 1] = Complex(kBernoulliEven[n - 1] /
                           (2.0 * n * (2.0 * n - 1.0)));
  }
  const Series g = series_exp(s, order);
  StirlingExpansion result;
  result.n_terms = n_terms;
  result.g.resize(n_terms);
  for (int k = 0; k < n_terms; ++k) result.g[k] = g[k].real();
  return result;
}

namespace {

ComplexMatrix stirling_prefactor(const EigenSystem& es) {
  // sqrt(2 pi) e^{-z} z^{z - 1/2} per eigenvalue, in log form.
  return apply_spectral_function(es, [](Complex z) {
    return std::exp(0.5 * std::log(2.0 * kPi) - z + (z - 0.5) * std::log(z));
  });
}

}  // namespace

TruncationResult gamma_stirling(const ComplexMatrix& a, int n_terms,
                                const GammaStirlingOptions& opts) {
  if (n_terms < 1) raise(ErrorCode::invalid_argument, "n_terms must be >= 1");
  require_positive_sector_margin(a, ErrorCode::sector_violation);
  if (!(omega_min_real(a) >= opts.theta)) {
    raise(ErrorCode::sector_violation,
          "spectrum must sit right of the sector vertex theta");
  }
  const EigenSystem es = eigensystem(a);

  const StirlingExpansion stirling = stirling_coefficients(n_terms + 1);
  const ComplexMatrix a_inv =
      matrix_inverse(a, ErrorCode::sector_violation, "A singular");
  ComplexMatrix sum = ComplexMatrix::Zero(a.rows(), a.cols());
  ComplexMatrix power = identity_like(a);
  for (int k = 0; k < n_terms; ++k) {
    sum += stirling.g[k] * power;
    power = ComplexMatrix(power * a_inv);
  }
  // `power` is now A^{-N}.
  const ComplexMatrix prefactor = stirling_prefactor(es);

  TruncationResult result;
  result.n_terms = n_terms;
  result.value = prefactor * sum;
  result.first_omitted_norm =
      spectral_norm(ComplexMatrix(prefactor * (stirling.g[n_terms] * power)));
  return result;
}

double gamma_remainder_bound(const ComplexMatrix& a, int n_terms) {
  if (n_terms < 1) raise(ErrorCode::invalid_argument, "n_terms must be >= 1");
  if (!is_hermitian(a) || !(mu_lower_bound(a) > 0.0)) {
    raise(ErrorCode::not_hermitian_pd,
          "remainder bound holds for Hermitian positive definite A");
  }
  const double inv_norm = 1.0 / smallest_singular_value(a);
  const double n = static_cast<double>(n_terms);
  return (1.0 + zeta_int(n_terms)) * std::tgamma(n) *
         std::pow(2.0 * kPi, -(n + 1.0)) * std::pow(inv_norm, n);
}

ComplexMatrix scaled_gamma(const ComplexMatrix& a) {
  require_positive_sector_margin(a, ErrorCode::sector_violation);
  const EigenSystem es = eigensystem(a);
  return apply_spectral_function(es,
                                 [](Complex z) { return scaled_gamma_scalar(z); });
}

ComplexMatrix bessel_integral(const ComplexMatrix& a, const BesselSpec& spec) {
  validate_bessel_spec(spec);
  if (!(mu_lower_bound(a) > -0.5)) {
    raise(ErrorCode::mu_too_small, "Bessel integral needs mu(A) > -1/2");
  }

  const ComplexMatrix eye = identity_like(a);
  const ComplexMatrix exponent = a - 0.5 * eye;
  const Complex z = spec.z;
  const bool modified = spec.kind == BesselKind::I;

  auto kernel = [z, modified](double t) {
    return modified ? std::cosh(z * t) : std::cos(z * t);
  };
  // Even integrand: fold [-1,1] onto 2 int_0^1.
  MatrixIntegrand direct = [&](double t) {
    return ComplexMatrix(kernel(t) *
                         matrix_exp(ComplexMatrix(std::log1p(-t * t) * exponent)));
  };
  // Near t = 1 substitute t = 1 - u^2, 1 - t^2 = u^2 (2 - u^2).
  MatrixIntegrand near_one = [&](double u) {
    const double t = 1.0 - u * u;
    const double log_w = 2.0 * std::log(u) + std::log(2.0 - u * u);
    return ComplexMatrix(2.0 * u * kernel(t) *
                         matrix_exp(ComplexMatrix(log_w * exponent)));
  };

  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  ComplexMatrix integral = integrate_adaptive(direct, 0.0, 0.5, opts);
  integral += integrate_adaptive(near_one, 0.0, std::sqrt(0.5), opts);
  integral *= 2.0;

  const ComplexMatrix zpow = matrix_exp(ComplexMatrix(std::log(0.5 * z) * a));
  const ComplexMatrix recip = reciprocal_gamma(ComplexMatrix(a + 0.5 * eye), 0);
  return ComplexMatrix(zpow * recip * integral / std::sqrt(kPi));
}

ComplexMatrix bessel_leading(const ComplexMatrix& a, const BesselSpec& spec) {
  validate_bessel_spec(spec);
  require_positive_sector_margin(a, ErrorCode::sector_violation);
  const ComplexMatrix eye = identity_like(a);
  const ComplexMatrix zpow = matrix_exp(ComplexMatrix(std::log(0.5 * spec.z) * a));
  const ComplexMatrix recip = reciprocal_gamma(ComplexMatrix(a + 0.5 * eye), 0);
  const ComplexMatrix root =
      matrix_power(ComplexMatrix(a - 0.5 * eye), Complex(-0.5));
  return ComplexMatrix(zpow * recip * root);
}

ComplexMatrix bessel_asymptotic(const ComplexMatrix& a, const BesselSpec& spec) {
  validate_bessel_spec(spec);
  require_positive_sector_margin(a, ErrorCode::sector_violation);
  const ComplexMatrix eye = identity_like(a);
  const Complex base = std::exp(Complex(1.0)) * spec.z * 0.5;
  const ComplexMatrix zpow = matrix_exp(ComplexMatrix(std::log(base) * a));
  const ComplexMatrix apow =
      matrix_power(a, ComplexMatrix(-a - 0.5 * eye));
  return ComplexMatrix(zpow * apow / std::sqrt(2.0 * kPi));
}

ComplexMatrix kummer_series(const KummerParams& params, const ComplexMatrix& a) {
  const Complex pa = params.a;
  const Complex pb = params.b;
  if (std::abs(pb.imag()) < 1e-14 &&
      std::abs(pb.real() - std::round(pb.real())) < 1e-14 && pb.real() <= 0.0) {
    raise(ErrorCode::invalid_argument, "Kummer parameter b hits a pole");
  }
  if (spectral_norm(a) > 50.0) {
    raise(ErrorCode::no_convergence,
          "kummer_series is unreliable in double precision for ||A|| > 50");
  }
  ComplexMatrix term = identity_like(a);
  ComplexMatrix sum = term;
  int tiny_streak = 0;
  for (int n = 0; n < 10000; ++n) {
    term = ComplexMatrix(term * a * ((pa + Complex(n, 0)) /
                                     ((pb + Complex(n, 0)) * Complex(n + 1, 0))));
    sum += term;
    if (spectral_norm(term) < 1e-16 * spectral_norm(sum)) {
      if (++tiny_streak >= 3) return sum;
    } else {
      tiny_streak = 0;
    }
  }
  raise(ErrorCode::no_convergence, "Kummer series exceeded 10^4 terms");
}

double kummer_first_formula_residual(const KummerParams& params,
                                     const ComplexMatrix& a) {
  const ComplexMatrix lhs = kummer_series(params, a);
  const KummerParams reflected{params.b - params.a, params.b};
  const ComplexMatrix rhs =
      matrix_exp(a) * kummer_series(reflected, ComplexMatrix(-a));
  return spectral_norm(ComplexMatrix(lhs - rhs));
}

TruncationResult kummer_asymptotic(const KummerParams& params, const ComplexMatrix& a,
                                   int n_terms, int argument_sign) {
  if (n_terms < 1) raise(ErrorCode::invalid_argument, "n_terms must be >= 1");
  if (argument_sign != 1 && argument_sign != -1) {
    raise(ErrorCode::invalid_argument, "argument_sign must be +1 or -1");
  }
  const ComplexMatrix a_inv =
      matrix_inverse(a, ErrorCode::not_sectorial, "A singular");

  Complex ratio;
  ComplexMatrix prefactor;
  Complex first;   // Pochhammer bases of the inverse-power series
  Complex second;
  if (argument_sign < 0) {
    // 1F1(a;b;-A) ~ Gamma(b)/Gamma(b-a) A^{-a} sum (a)_n (a-b+1)_n / n! A^{-n}
    ratio = gamma_ratio(params.b, params.b - params.a);
    prefactor = matrix_power(a, -params.a);
    first = params.a;
    second = params.a - params.b + 1.0;
  } else {
    // 1F1(a;b;A) ~ Gamma(b)/Gamma(a) e^A A^{a-b} sum (b-a)_n (1-a)_n / n! A^{-n}
    ratio = gamma_ratio(params.b, params.a);
    prefactor =
        ComplexMatrix(matrix_exp(a) * matrix_power(a, params.a - params.b));
    first = params.b - params.a;
    second = Complex(1.0) - params.a;
  }

  ComplexMatrix sum = ComplexMatrix::Zero(a.rows(), a.cols());
  ComplexMatrix power = identity_like(a);
  Complex coefficient(1.0);
  for (int n = 0; n < n_terms; ++n) {
    if (n > 0) {
      coefficient *= (first + Complex(n - 1, 0)) * (second + Complex(n - 1, 0)) /
                     Complex(n, 0);
      power = ComplexMatrix(power * a_inv);
    }
    sum += coefficient * power;
  }
  coefficient *= (first + Complex(n_terms - 1, 0)) *
                 (second + Complex(n_terms - 1, 0)) / Complex(n_terms, 0);
  power = ComplexMatrix(power * a_inv);

  TruncationResult result;
  result.n_terms = n_terms;
  result.value = ComplexMatrix(ratio * prefactor * sum);
  result.first_omitted_norm =
      std::abs(ratio) * spectral_norm(ComplexMatrix(prefactor * (coefficient * power)));
  return result;
}

ComplexMatrix kummer_mellin_barnes(const KummerParams& params, const ComplexMatrix& a,
                                   const MellinBarnesOptions& opts) {
  const SpectralProfile profile = spectral_profile(a);
  if (!(profile.delta_margin > 0.0)) {
    raise(ErrorCode::no_decay, "Mellin-Barnes integrand needs a sector margin");
  }
  double c = opts.contour_re;
  if (std::isnan(c)) c = -0.5 * std::min(params.a.real(), 1.0);
  if (!(c < 0.0) || !(c > -params.a.real())) {
    raise(ErrorCode::contour_pole,
          "contour must satisfy -Re(a) < Re(s) < 0 to separate the poles");
  }

  const ComplexMatrix log_a = matrix_log(a);
  const Complex pa = params.a;
  const Complex pb = params.b;

  MatrixIntegrand integrand = [&](double tau) {
    const Complex s(c, tau);
    const Complex weight = std::exp(lgamma_scalar(-s) + lgamma_scalar(s + pa) -
                                    lgamma_scalar(s + pb));
    return ComplexMatrix(weight * matrix_exp(ComplexMatrix(s * log_a)) /
                         (2.0 * kPi));
  };

  QuadratureOptions quad;
  quad.abs_tol = 1e-12;

  const double block = 5.0;
  ComplexMatrix total = integrate_adaptive(integrand, -block, block, quad);
  double reach = block;
  while (reach < opts.truncation) {
    const ComplexMatrix upper =
        integrate_adaptive(integrand, reach, reach + block, quad);
    const ComplexMatrix lower =
        integrate_adaptive(integrand, -reach - block, -reach, quad);
    total += upper + lower;
    const double contribution =
        std::max(upper.cwiseAbs().maxCoeff(), lower.cwiseAbs().maxCoeff());
    if (contribution < 1e-12 * std::max(total.cwiseAbs().maxCoeff(), 1e-30)) break;
    reach += block;
  }
  return total;
}

}  // namespace matasym
