#ifndef MATASYM_MATRIX_FUNCTIONS_HPP
#define MATASYM_MATRIX_FUNCTIONS_HPP

#include "matasym/matrix.hpp"

namespace matasym {

// exp(A) by Pade-13 scaling and squaring.
ComplexMatrix matrix_exp(const ComplexMatrix& a);

// Principal logarithm through the gated eigendecomposition. Throws BranchCut
// if an eigenvalue sits on the closed negative real axis.
ComplexMatrix matrix_log(const ComplexMatrix& a);

// A^alpha = exp(alpha log A). alpha == 0 returns the identity exactly.
ComplexMatrix matrix_power(const ComplexMatrix& a, Complex alpha);

// A^E = exp(E log A) for a matrix exponent commuting with A (e.g. a
// polynomial in A); used for A^{A - I/2} and relatives.
ComplexMatrix matrix_power(const ComplexMatrix& a, const ComplexMatrix& exponent);

// A^{-alpha} = Gamma(alpha)^{-1} int_0^inf t^{alpha-1} e^{-tA} dt for
// alpha > 0, by adaptive quadrature. Throws NotSectorial when mu(A) <= 0.
ComplexMatrix matrix_power_integral(const ComplexMatrix& a, double alpha);

// t^{A - I} = exp((A - I) log t) for t > 0.
ComplexMatrix scalar_base_power(double t, const ComplexMatrix& a);

}  // namespace matasym

#endif  // MATASYM_MATRIX_FUNCTIONS_HPP
