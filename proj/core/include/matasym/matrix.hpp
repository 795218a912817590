#ifndef MATASYM_MATRIX_HPP
#define MATASYM_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace matasym {

using Complex = std::complex<double>;

// Dense square complex matrix; the argument A of every expansion.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Spectral norm (largest singular value). All norm statements in this
// library are in this norm unless a different one is named explicitly.
double spectral_norm(const ComplexMatrix& a);

// ||A^{-1}||_2^{-1} would need an inverse; this returns sigma_min instead,
// which is the same number.
double smallest_singular_value(const ComplexMatrix& a);

ComplexMatrix identity_like(const ComplexMatrix& a);

bool is_square(const ComplexMatrix& a);

// ||A A^H - A^H A||_2 <= 1e-12 ||A||_2^2, scale-invariant normality test.
bool is_normal(const ComplexMatrix& a, double tol = 1e-12);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);

}  // namespace matasym

#endif  // MATASYM_MATRIX_HPP
