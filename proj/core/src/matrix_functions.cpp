#include "matasym/matrix_functions.hpp"

#include <array>
#include <cmath>

#include "matasym/eigensystem.hpp"
#include "matasym/errors.hpp"
#include "matasym/quadrature.hpp"
#include "matasym/scalar_functions.hpp"
#include "matasym/spectral.hpp"

namespace matasym {

namespace {

// Pade-13 numerator coefficients (Higham 2005); theta_13 below is the
// 1-norm threshold for full double accuracy.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

constexpr double kTheta13 = 5.371920351148152;

ComplexMatrix pade13_exp(const ComplexMatrix& a) {
  const ComplexMatrix eye = identity_like(a);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix u =
      a * (a6 * (kPade13[13] * a6 + kPade13[11] * a4 + kPade13[9] * a2) +
           kPade13[7] * a6 + kPade13[5] * a4 + kPade13[3] * a2 + kPade13[1] * eye);
  const ComplexMatrix v =
      a6 * (kPade13[12] * a6 + kPade13[10] * a4 + kPade13[8] * a2) +
      kPade13[6] * a6 + kPade13[4] * a4 + kPade13[2] * a2 + kPade13[0] * eye;
  return ComplexMatrix(v - u).fullPivLu().solve(ComplexMatrix(v + u));
}

bool eigenvalue_on_branch_cut(Complex lambda, double scale) {
  const double tol = 1e-13 * std::max(1.0, scale);
  if (std::abs(lambda) <= tol) return true;
  return lambda.real() < 0.0 && std::abs(lambda.imag()) <= tol;
}

}  // namespace

ComplexMatrix matrix_exp(const ComplexMatrix& a) {
  if (!is_square(a)) raise(ErrorCode::invalid_argument, "matrix must be square");
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  ComplexMatrix result = pade13_exp(a / std::pow(2.0, squarings));
  for (int i = 0; i < squarings; ++i) result = ComplexMatrix(result * result);
  return result;
}

ComplexMatrix matrix_log(const ComplexMatrix& a) {
  const EigenSystem es = eigensystem(a);
  const double scale = spectral_norm(a);
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    if (eigenvalue_on_branch_cut(es.values(i), scale)) {
      raise(ErrorCode::branch_cut,
            "eigenvalue on the closed negative real axis, no principal log");
    }
  }
  return apply_spectral_function(es, [](Complex z) { return std::log(z); });
}

ComplexMatrix matrix_power(const ComplexMatrix& a, Complex alpha) {
  if (alpha == Complex(0.0)) return identity_like(a);
  return matrix_exp(ComplexMatrix(alpha * matrix_log(a)));
}

ComplexMatrix matrix_power(const ComplexMatrix& a, const ComplexMatrix& exponent) {
  if (a.rows() != exponent.rows() || a.cols() != exponent.cols()) {
    raise(ErrorCode::invalid_argument, "exponent shape must match the base");
  }
  return matrix_exp(ComplexMatrix(exponent * matrix_log(a)));
}

ComplexMatrix matrix_power_integral(const ComplexMatrix& a, double alpha) {
  if (!(alpha > 0.0)) raise(ErrorCode::invalid_argument, "alpha must be positive");
  const double mu = mu_lower_bound(a);
  if (!(mu > 0.0)) {
    raise(ErrorCode::not_sectorial, "matrix_power_integral needs mu(A) > 0");
  }

  MatrixIntegrand integrand = [&a, alpha](double t) {
    return ComplexMatrix(std::pow(t, alpha - 1.0) * matrix_exp(ComplexMatrix(-t * a)));
  };

  // t^{alpha-1} e^{-mu t} envelope: integrate (0,1) under t = u^m to flatten
  // the endpoint, then (1, T) directly.
  const int m = std::clamp(static_cast<int>(std::ceil(2.0 / alpha)), 1, 8);
  QuadratureOptions opts;
  opts.abs_tol = 5e-13;
  const ComplexMatrix head =
      integrate_adaptive(substitute_power(integrand, 0.0, m), 0.0, 1.0, opts);
  const double floor_value = 1e-16;
  const double tail_end = tail_cutoff(
      [mu, alpha](double t) { return std::pow(t, alpha - 1.0) * std::exp(-mu * t); },
      floor_value, 2.0 / mu + 1.0);
  const ComplexMatrix tail = integrate_adaptive(integrand, 1.0, tail_end, opts);

  return ComplexMatrix((head + tail) / gamma_scalar(Complex(alpha)));
}

ComplexMatrix scalar_base_power(double t, const ComplexMatrix& a) {
  if (!(t > 0.0)) raise(ErrorCode::invalid_argument, "base must be positive");
  const ComplexMatrix shifted = a - identity_like(a);
  return matrix_exp(ComplexMatrix(std::log(t) * shifted));
}

}  // namespace matasym
