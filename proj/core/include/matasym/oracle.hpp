#ifndef MATASYM_ORACLE_HPP
#define MATASYM_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "matasym/matrix.hpp"

namespace matasym {

enum class FamilyKind {
  hermitian_pd,
  normal_sectorial,
  diagonalizable_conditioned,
};

// Reproducible generator description for a class of test matrices. Spectra
// are drawn from the annulus sector {r in [radius_min, radius_max],
// |arg| <= max_angle}; hermitian_pd ignores max_angle. The sector margin
// certified by the family is delta() = pi/2 - max_angle.
struct MatrixFamily {
  FamilyKind kind = FamilyKind::hermitian_pd;
  int dim = 3;
  double radius_min = 1.0;
  double radius_max = 10.0;
  double max_angle = 0.0;
  double target_np = 1.0;  // diagonalizable_conditioned only
  std::uint64_t seed = 1;

  double delta() const;
};

// Deterministic batch: same family and seed give bitwise-identical output.
// Every matrix is re-checked against the family invariants after
// construction; persistent failures raise GenerationFailed.
std::vector<ComplexMatrix> generate(const MatrixFamily& family, int count);

// P diag(f(lambda_i)) P^{-1} through the gated eigendecomposition.
ComplexMatrix lift_scalar(const std::function<Complex(Complex)>& f,
                          const ComplexMatrix& a);

// int_a^b f(t) e^{-tA} dt by adaptive quadrature; b may be infinite, in
// which case the tail is truncated under the envelope m0 e^{(growth_b-mu)t}.
// Throws NotConvergent when mu(A) <= growth_b.
ComplexMatrix matrix_laplace_quadrature(const std::function<Complex(double)>& f,
                                        const ComplexMatrix& a, double lower = 0.0,
                                        double upper = -1.0,  // < lower means +inf
                                        double growth_b = 0.0, double m0 = 1.0,
                                        double abs_tol = 1e-12);

// int_a^b phi(x) e^{-h(x) A} dx for an increasing-from-the-left phase h;
// infinite b truncated where exp(-(h(x)-h(a)) mu) falls below 1e-16.
ComplexMatrix matrix_laplace_quadrature(const std::function<Complex(double)>& phi,
                                        const std::function<double(double)>& h,
                                        const ComplexMatrix& a, double lower,
                                        double upper, double abs_tol = 1e-12);

}  // namespace matasym

#endif  // MATASYM_ORACLE_HPP
