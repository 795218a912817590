#ifndef MATASYM_EIGENSYSTEM_HPP
#define MATASYM_EIGENSYSTEM_HPP

#include <functional>

#include "matasym/matrix.hpp"

namespace matasym {

// Diagonalization A = V diag(values) V^{-1} with a conditioning certificate.
// Normal matrices go through a unitary (Schur) route and report condition 1;
// everything else is gated: vector_condition > 1e8 throws NearDefective.
struct EigenSystem {
  ComplexVector values;
  ComplexMatrix vectors;
  double vector_condition = 1.0;
  bool unitary = false;
};

inline constexpr double kEigenConditionGate = 1e8;

EigenSystem eigensystem(const ComplexMatrix& a);

// Eigenvalues without the conditioning gate (works for defective matrices).
ComplexVector eigenvalues_only(const ComplexMatrix& a);

// V diag(f(lambda_i)) V^{-1}. The workhorse behind every lifted scalar
// function of a matrix.
ComplexMatrix apply_spectral_function(const EigenSystem& es,
                                      const std::function<Complex(Complex)>& f);

}  // namespace matasym

#endif  // MATASYM_EIGENSYSTEM_HPP
