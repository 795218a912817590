#include "matasym/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "matasym/eigensystem.hpp"
#include "matasym/errors.hpp"

namespace matasym {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  if (!is_square(a)) raise(ErrorCode::invalid_argument, "matrix must be square");
  ComplexMatrix h = 0.5 * (a + a.adjoint());
  // Kill the eps-level asymmetry so downstream solvers see exact Hermitian data.
  h = ComplexMatrix(0.5 * (h + h.adjoint()));
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  return h;
}

double mu_lower_bound(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(a),
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double omega_min_real(const ComplexMatrix& a) {
  const ComplexVector ev = eigenvalues_only(a);
  double omega = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ev.size(); ++i) omega = std::min(omega, ev(i).real());
  return omega;
}

SpectralProfile spectral_profile(const ComplexMatrix& a) {
  SpectralProfile profile;
  profile.is_normal = is_normal(a);

  const EigenSystem es = eigensystem(a);
  profile.n_p = es.vector_condition;

  const double scale = spectral_norm(a);
  double max_abs_arg = 0.0;
  bool has_zero = false;
  profile.omega = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    const Complex lambda = es.values(i);
    profile.eigenvalues.push_back(lambda);
    profile.omega = std::min(profile.omega, lambda.real());
    if (std::abs(lambda) <= 1e-13 * std::max(1.0, scale)) {
      has_zero = true;
    } else {
      max_abs_arg = std::max(max_abs_arg, std::abs(std::arg(lambda)));
    }
  }
  profile.delta_margin = has_zero ? -kPi / 2.0 : kPi / 2.0 - max_abs_arg;
  profile.mu = mu_lower_bound(a);
  profile.eta = profile.omega > 0.0 ? profile.mu / profile.omega
                                    : std::numeric_limits<double>::quiet_NaN();
  profile.is_hermitian_pd = is_hermitian(a) && profile.mu > 0.0;
  return profile;
}

bool spectrum_in_sector(const ComplexMatrix& a, double delta) {
  if (!(delta > 0.0) || !(delta < kPi / 2.0)) {
    raise(ErrorCode::invalid_argument, "sector margin must lie in (0, pi/2)");
  }
  const ComplexVector ev = eigenvalues_only(a);
  const double scale = spectral_norm(a);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const Complex lambda = ev(i);
    if (std::abs(lambda) <= 1e-13 * std::max(1.0, scale)) return false;
    if (std::abs(std::arg(lambda)) > kPi / 2.0 - delta) return false;
  }
  return true;
}

ResolventBoundReport sample_resolvent_bound(const ComplexMatrix& a, double m_bound,
                                            double omega1,
                                            const std::vector<double>& lambda_grid,
                                            int n_max) {
  if (n_max < 1) raise(ErrorCode::invalid_argument, "n_max must be >= 1");
  ResolventBoundReport report;
  report.m_bound = m_bound;
  report.omega1 = omega1;
  report.lambda_samples = lambda_grid;
  report.n_max = n_max;

  const ComplexVector ev = eigenvalues_only(a);
  const double scale = spectral_norm(a);
  const ComplexMatrix eye = identity_like(a);

  double worst = 0.0;
  for (double lambda : lambda_grid) {
    if (!(lambda < omega1)) {
      raise(ErrorCode::invalid_argument, "lambda samples must satisfy lambda < omega1");
    }
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (std::abs(ev(i) - Complex(lambda)) <= 1e-12 * std::max(1.0, scale)) {
        raise(ErrorCode::singular_resolvent, "sampled shift hits an eigenvalue");
      }
    }
    const ComplexMatrix shifted = lambda * eye - a;
    const ComplexMatrix resolvent = shifted.fullPivLu().solve(eye);
    ComplexMatrix power = resolvent;
    double gap_power = omega1 - lambda;
    for (int n = 1; n <= n_max; ++n) {
      if (n > 1) {
        power = ComplexMatrix(power * resolvent);
        gap_power *= omega1 - lambda;
      }
      const double bound = m_bound / gap_power;
      const double ratio =
          bound > 0.0 ? spectral_norm(power) / bound
                      : std::numeric_limits<double>::infinity();
      worst = std::max(worst, ratio);
    }
  }
  report.worst_ratio = worst;
  report.passed = worst <= 1.0;
  return report;
}

}  // namespace matasym
