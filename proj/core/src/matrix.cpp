#include "matasym/matrix.hpp"

#include "matasym/errors.hpp"

namespace matasym {

double spectral_norm(const ComplexMatrix& a) {
  if (a.rows() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

double smallest_singular_value(const ComplexMatrix& a) {
  if (a.rows() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

ComplexMatrix identity_like(const ComplexMatrix& a) {
  return ComplexMatrix::Identity(a.rows(), a.cols());
}

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols(); }

bool is_normal(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) raise(ErrorCode::invalid_argument, "matrix must be square");
  const ComplexMatrix comm = a * a.adjoint() - a.adjoint() * a;
  const double scale = spectral_norm(a);
  return spectral_norm(comm) <= tol * scale * scale;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) raise(ErrorCode::invalid_argument, "matrix must be square");
  const double scale = spectral_norm(a);
  return spectral_norm(ComplexMatrix(a - a.adjoint())) <= tol * std::max(1.0, scale);
}

}  // namespace matasym
