#include "matasym/eigensystem.hpp"

#include <Eigen/Eigenvalues>

#include "matasym/errors.hpp"

namespace matasym {

EigenSystem eigensystem(const ComplexMatrix& a) {
  if (!is_square(a)) raise(ErrorCode::invalid_argument, "matrix must be square");
  EigenSystem es;
  if (is_hermitian(a)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    es.values = solver.eigenvalues().cast<Complex>();
    es.vectors = solver.eigenvectors();
    es.unitary = true;
    return es;
  }
  if (is_normal(a)) {
    // Schur form of a normal matrix is diagonal; keep the unitary factor.
    Eigen::ComplexSchur<ComplexMatrix> schur(a);
    es.values = schur.matrixT().diagonal();
    es.vectors = schur.matrixU();
    es.unitary = true;
    return es;
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    raise(ErrorCode::near_defective, "eigendecomposition failed to converge");
  }
  es.values = solver.eigenvalues();
  es.vectors = solver.eigenvectors();
  Eigen::JacobiSVD<ComplexMatrix> svd(es.vectors);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin <= 0.0) {
    raise(ErrorCode::near_defective, "eigenvector matrix numerically singular");
  }
  es.vector_condition = svd.singularValues()(0) / smin;
  if (es.vector_condition > kEigenConditionGate) {
    raise(ErrorCode::near_defective, "eigenvector condition exceeds 1e8 gate");
  }
  return es;
}

ComplexVector eigenvalues_only(const ComplexMatrix& a) {
  if (!is_square(a)) raise(ErrorCode::invalid_argument, "matrix must be square");
  if (is_hermitian(a)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cast<Complex>();
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/false);
  return solver.eigenvalues();
}

ComplexMatrix apply_spectral_function(const EigenSystem& es,
                                      const std::function<Complex(Complex)>& f) {
  ComplexVector fx(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) fx(i) = f(es.values(i));
  const ComplexMatrix scaled = es.vectors * fx.asDiagonal();
  if (es.unitary) return scaled * es.vectors.adjoint();
  return es.vectors.transpose()
      .fullPivLu()
      .solve(scaled.transpose())
      .transpose();  // scaled * vectors^{-1}
}

}  // namespace matasym
