#include "matasym/oracle.hpp"

#include <cmath>
#include <random>

#include "matasym/eigensystem.hpp"
#include "matasym/errors.hpp"
#include "matasym/matrix_functions.hpp"
#include "matasym/quadrature.hpp"
#include "matasym/spectral.hpp"

namespace matasym {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Explicit Box-Muller on top of the engine's bit-exact integers, so the
// byte stream does not depend on the standard library's distribution
// implementations.
double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

Complex gaussian(std::mt19937_64& rng) {
  const double u1 = std::max(uniform01(rng), 1e-300);
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return Complex(r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2));
}

ComplexMatrix gaussian_matrix(std::mt19937_64& rng, int dim) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gaussian(rng);
  return g;
}

// Haar-ish unitary: QR of a Gaussian matrix with the R diagonal phases
// folded into Q.
ComplexMatrix random_unitary(std::mt19937_64& rng, int dim) {
  const ComplexMatrix g = gaussian_matrix(rng, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const Complex phase = std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
    q.col(j) *= phase;
  }
  return q;
}

ComplexVector sector_spectrum(std::mt19937_64& rng, const MatrixFamily& fam,
                              bool real_only) {
  ComplexVector values(fam.dim);
  for (int i = 0; i < fam.dim; ++i) {
    const double r = uniform(rng, fam.radius_min, fam.radius_max);
    if (real_only) {
      values(i) = Complex(r, 0.0);
    } else {
      // Stay 5% inside the sector edge so certified margins are strict.
      const double phi = uniform(rng, -0.95 * fam.max_angle, 0.95 * fam.max_angle);
      values(i) = std::polar(r, phi);
    }
  }
  return values;
}

double measured_np(const ComplexMatrix& a) { return eigensystem(a).vector_condition; }

ComplexMatrix conditioned_candidate(std::mt19937_64& rng, const MatrixFamily& fam) {
  const ComplexVector values = sector_spectrum(rng, fam, false);
  ComplexMatrix nil = ComplexMatrix::Zero(fam.dim, fam.dim);
  for (int i = 0; i < fam.dim; ++i)
    for (int j = i + 1; j < fam.dim; ++j) nil(i, j) = gaussian(rng);
  const double nil_norm = spectral_norm(nil);
  if (nil_norm == 0.0) raise(ErrorCode::generation_failed, "degenerate nilpotent draw");
  nil /= nil_norm;

  auto build = [&](double eps) {
    const ComplexMatrix p =
        ComplexMatrix::Identity(fam.dim, fam.dim) + eps * nil;
    const ComplexMatrix scaled = p * values.asDiagonal();
    return ComplexMatrix(p.transpose()
                             .fullPivLu()
                             .solve(scaled.transpose())
                             .transpose());  // P diag P^{-1}
  };

  // n_p(eps) grows monotonically from 1; bracket then bisect on the measured
  // conditioning of the rebuilt matrix.
  double lo = 0.0, hi = 1.0;
  while (measured_np(build(hi)) < fam.target_np && hi < 1e6) hi *= 2.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (measured_np(build(mid)) < fam.target_np) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12 * (1.0 + hi)) break;
  }
  return build(0.5 * (lo + hi));
}

bool family_invariants_hold(const MatrixFamily& fam, const ComplexMatrix& a) {
  const double delta = fam.delta();
  if (delta > 0.0 && !spectrum_in_sector(a, delta)) return false;
  switch (fam.kind) {
    case FamilyKind::hermitian_pd: {
      return is_hermitian(a) && mu_lower_bound(a) > 0.0;
    }
    case FamilyKind::normal_sectorial:
      return is_normal(a);
    case FamilyKind::diagonalizable_conditioned: {
      const double np = measured_np(a);
      return np >= 0.8 * fam.target_np && np <= 1.2 * fam.target_np;
    }
  }
  return false;
}

}  // namespace

double MatrixFamily::delta() const {
  if (kind == FamilyKind::hermitian_pd) return kPi / 2.0 - 1e-3;
  return kPi / 2.0 - max_angle;
}

std::vector<ComplexMatrix> generate(const MatrixFamily& family, int count) {
  if (family.dim < 1 || family.radius_min <= 0.0 ||
      family.radius_max < family.radius_min || count < 0 ||
      family.max_angle < 0.0 || family.max_angle >= kPi / 2.0) {
    raise(ErrorCode::invalid_argument, "malformed matrix family");
  }
  std::mt19937_64 rng(family.seed);
  std::vector<ComplexMatrix> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    ComplexMatrix a;
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
      switch (family.kind) {
        case FamilyKind::hermitian_pd: {
          const ComplexMatrix u = random_unitary(rng, family.dim);
          const ComplexVector values = sector_spectrum(rng, family, true);
          a = hermitian_part(u * values.asDiagonal() * u.adjoint());
          break;
        }
        case FamilyKind::normal_sectorial: {
          const ComplexMatrix u = random_unitary(rng, family.dim);
          const ComplexVector values = sector_spectrum(rng, family, false);
          a = u * values.asDiagonal() * u.adjoint();
          break;
        }
        case FamilyKind::diagonalizable_conditioned:
          a = conditioned_candidate(rng, family);
          break;
      }
      ok = family_invariants_hold(family, a);
    }
    if (!ok) raise(ErrorCode::generation_failed, "family invariants not met in 100 tries");
    out.push_back(std::move(a));
  }
  return out;
}

ComplexMatrix lift_scalar(const std::function<Complex(Complex)>& f,
                          const ComplexMatrix& a) {
  return apply_spectral_function(eigensystem(a), f);
}

ComplexMatrix matrix_laplace_quadrature(const std::function<Complex(double)>& f,
                                        const ComplexMatrix& a, double lower,
                                        double upper, double growth_b, double m0,
                                        double abs_tol) {
  const double mu = mu_lower_bound(a);
  const bool infinite = upper < lower;
  if (infinite && !(mu > growth_b)) {
    raise(ErrorCode::not_convergent, "tail needs mu(A) > growth rate of f");
  }

  MatrixIntegrand integrand = [&f, &a](double t) {
    return ComplexMatrix(f(t) * matrix_exp(ComplexMatrix(-t * a)));
  };

  QuadratureOptions opts;
  opts.abs_tol = abs_tol;

  double end = upper;
  if (infinite) {
    end = tail_cutoff(
        [&](double t) { return m0 * std::exp((growth_b - mu) * t); }, 1e-16,
        lower + 1.0 / mu + 1.0);
  }

  // First unit stretch under t = lower + u^2 to tame t^{alpha-1}-type
  // integrands; smooth integrands lose nothing.
  const double split = std::min(lower + 1.0, end);
  ComplexMatrix head = integrate_adaptive(
      substitute_power(integrand, lower, 2), 0.0, std::sqrt(split - lower), opts);
  if (end > split) {
    head += integrate_adaptive(integrand, split, end, opts);
  }
  return head;
}

ComplexMatrix matrix_laplace_quadrature(const std::function<Complex(double)>& phi,
                                        const std::function<double(double)>& h,
                                        const ComplexMatrix& a, double lower,
                                        double upper, double abs_tol) {
  const double mu = mu_lower_bound(a);
  const bool infinite = upper < lower || std::isinf(upper);
  if (infinite && !(mu > 0.0)) {
    raise(ErrorCode::not_convergent, "infinite phase integral needs mu(A) > 0");
  }

  MatrixIntegrand integrand = [&phi, &h, &a](double x) {
    return ComplexMatrix(phi(x) * matrix_exp(ComplexMatrix(-h(x) * a)));
  };

  QuadratureOptions opts;
  opts.abs_tol = abs_tol;

  const double h0 = h(lower);
  double end = upper;
  if (infinite) {
    end = tail_cutoff(
        [&](double x) { return std::exp(-(h(x) - h0) * mu); }, 1e-16,
        lower + 1.0);
  }

  const double split = std::min(lower + 1.0, end);
  ComplexMatrix head = integrate_adaptive(
      substitute_power(integrand, lower, 2), 0.0, std::sqrt(split - lower), opts);
  if (end > split) {
    head += integrate_adaptive(integrand, split, end, opts);
  }
  return head;
}

}  // namespace matasym
