#ifndef MATASYM_SPECFUN_HPP
#define MATASYM_SPECFUN_HPP

#include <limits>
#include <vector>

#include "matasym/expansions.hpp"
#include "matasym/matrix.hpp"
#include "matasym/scalar_functions.hpp"

namespace matasym {

// Coefficients g_k of the scaled-gamma series Gamma*(z) ~ sum g_k z^{-k};
// g_0 = 1 and g_1 = 1/12 exactly.
struct StirlingExpansion {
  std::vector<double> g;
  int n_terms = 0;
};

struct KummerParams {
  Complex a;
  Complex b;  // must avoid 0, -1, -2, ...
};

enum class BesselKind { J, I };

// Argument of a Bessel evaluation: J needs |arg z| < pi, I needs
// |arg z| < pi/2; the paired matrix must satisfy mu(A) > -1/2.
struct BesselSpec {
  BesselKind kind = BesselKind::J;
  Complex z{1.0, 0.0};
};

// Gamma(A) with the scalar gamma lifted across the gated eigendecomposition.
// Requires Re(lambda) > 0 (SpectrumNotRight otherwise).
ComplexMatrix gamma_matrix(const ComplexMatrix& a);

// Gamma(A) = int_0^inf t^{A-I} e^{-t} dt by adaptive quadrature; the
// independent cross-check of gamma_matrix. Requires omega(A) > 0.
ComplexMatrix gamma_integral(const ComplexMatrix& a);

// A (A+I) ... (A+(n-1)I) Gamma(A+nI)^{-1}; n_shift = 0 inverts directly.
// The result does not depend on n_shift.
ComplexMatrix reciprocal_gamma(const ComplexMatrix& a, int n_shift);

StirlingExpansion stirling_coefficients(int n_terms);

struct GammaStirlingOptions {
  // Sector gate: spectrum strictly right of theta with positive sector
  // margin. theta matches the vertex of the admissible region.
  double theta = 0.5;
};

// sqrt(2 pi) e^{-A} A^{A - I/2} sum_{k<N} g_k A^{-k}. The prefactor is
// evaluated as a single lifted scalar function: factoring it into three
// matrix products loses all accuracy once the spectrum spreads, because the
// factors peak in different eigendirections.
TruncationResult gamma_stirling(const ComplexMatrix& a, int n_terms,
                                const GammaStirlingOptions& opts = {});

// (1 + zeta(N)) Gamma(N) (2 pi)^{-(N+1)} ||A^{-1}||^N for Hermitian positive
// definite A. N = 1 yields +inf (zeta pole), making that case vacuous.
double gamma_remainder_bound(const ComplexMatrix& a, int n_terms);

// Gamma*(A) = (2 pi)^{-1/2} e^{A} A^{I/2 - A} Gamma(A), fused per eigenvalue.
ComplexMatrix scaled_gamma(const ComplexMatrix& a);

// Bessel J_A(z) or I_A(z) from the finite integral representation
// (z/2)^A Gamma^{-1}(A + I/2) / sqrt(pi) * int_{-1}^{1} (1-t^2)^{A-I/2} k(zt) dt
// with k = cos or cosh. Endpoint behavior is tamed by t = 1 - u^2.
ComplexMatrix bessel_integral(const ComplexMatrix& a, const BesselSpec& spec);

// Leading term L(A) = (z/2)^A Gamma^{-1}(A + I/2) (A - I/2)^{-1/2}.
ComplexMatrix bessel_leading(const ComplexMatrix& a, const BesselSpec& spec);

// Fully expanded leading form (2 pi)^{-1/2} (e z / 2)^A A^{-A - I/2}.
ComplexMatrix bessel_asymptotic(const ComplexMatrix& a, const BesselSpec& spec);

// 1F1(a;b;A) = sum (a)_n / (b)_n A^n / n!. Reliable for ||A|| <= 50; the
// sum stops after three consecutive terms below 1e-16 of the partial sum.
ComplexMatrix kummer_series(const KummerParams& params, const ComplexMatrix& a);

// || 1F1(a;b;A) - e^A 1F1(b-a;b;-A) ||_2.
double kummer_first_formula_residual(const KummerParams& params,
                                     const ComplexMatrix& a);

// Large-argument expansion of the Kummer function.
//   sign -1: Gamma(b)/Gamma(b-a) A^{-a}   sum (a)_n (a-b+1)_n / n! A^{-n}
//            (approximates 1F1(a;b;-A))
//   sign +1: Gamma(b)/Gamma(a) e^A A^{a-b} sum (b-a)_n (1-a)_n / n! A^{-n}
//            (approximates 1F1(a;b;+A))
TruncationResult kummer_asymptotic(const KummerParams& params, const ComplexMatrix& a,
                                   int n_terms, int argument_sign);

struct MellinBarnesOptions {
  // NaN means the default contour Re s = -min(Re a, 1)/2.
  double contour_re = std::numeric_limits<double>::quiet_NaN();
  double truncation = 200.0;  // cap on |Im s|
};

// (2 pi i)^{-1} int Gamma(-s) Gamma(s+a) / Gamma(s+b) A^s ds over a vertical
// contour separating the pole families; equals Gamma(a)/Gamma(b) 1F1(a;b;-A).
ComplexMatrix kummer_mellin_barnes(const KummerParams& params, const ComplexMatrix& a,
                                   const MellinBarnesOptions& opts = {});

}  // namespace matasym

#endif  // MATASYM_SPECFUN_HPP
