#ifndef MATASYM_SCALAR_FUNCTIONS_HPP
#define MATASYM_SCALAR_FUNCTIONS_HPP

#include <complex>

namespace matasym {

using Complex = std::complex<double>;

// Gamma function for complex argument (Lanczos approximation, g=7, n=9,
// reflection for Re z < 1/2). Poles return inf/nan.
Complex gamma_scalar(Complex z);

// log Gamma, up to an integer multiple of 2*pi*i; exp(lgamma_scalar(z))
// reproduces gamma_scalar(z). Returns +inf at the poles.
Complex lgamma_scalar(Complex z);

// Gamma(num)/Gamma(den), evaluated through lgamma so that a pole of the
// denominator yields an exact 0 instead of inf/inf.
Complex gamma_ratio(Complex num, Complex den);

// Scaled gamma: Gamma(z) / (sqrt(2 pi) e^{-z} z^{z-1/2}), -> 1 as |z| -> inf.
// Evaluated in log form, stable for large |z|.
Complex scaled_gamma_scalar(Complex z);

// Riemann zeta on the integers used by the remainder bound; zeta(1) = +inf.
double zeta_int(int n);

// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
Complex pochhammer(Complex x, int n);

// Bessel J_nu(z) and modified I_nu(z) by the ascending series. Reliable for
// |z| up to a few; accuracy is relative, so large nu (tiny values) is fine.
Complex bessel_j_series(Complex nu, Complex z);
Complex bessel_i_series(Complex nu, Complex z);

// Kummer 1F1(a;b;z) by direct series summation.
Complex kummer_scalar(Complex a, Complex b, Complex z);

// 1F1(a;b;z) routed through e^z 1F1(b-a;b;-z) when Re z < 0, which avoids
// the catastrophic cancellation of the alternating series.
Complex kummer_scalar_stable(Complex a, Complex b, Complex z);

// e^x E_1(x) for x > 0 by the continued fraction (modified Lentz).
double exp_e1(double x);

}  // namespace matasym

#endif  // MATASYM_SCALAR_FUNCTIONS_HPP
