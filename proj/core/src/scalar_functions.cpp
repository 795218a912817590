#include "matasym/scalar_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "matasym/errors.hpp"

namespace matasym {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7, 9 terms.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_sum(Complex z) {
  // z already shifted so the series is evaluated at z-1.
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Complex(i - 1, 0));
  return x;
}

bool near_nonpositive_integer(Complex z, double tol = 1e-14) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(z.real()));
}

}  // namespace

Complex gamma_scalar(Complex z) {
  if (near_nonpositive_integer(z)) {
    return Complex(std::numeric_limits<double>::infinity(), 0.0);
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z)).
    return kPi / (std::sin(kPi * z) * gamma_scalar(1.0 - z));
  }
  const Complex w = z - 1.0;
  const Complex t = w + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, w + 0.5) * std::exp(-t) * lanczos_sum(z);
}

Complex lgamma_scalar(Complex z) {
  if (near_nonpositive_integer(z)) {
    return Complex(std::numeric_limits<double>::infinity(), 0.0);
  }
  if (z.real() < 0.5) {
    return std::log(Complex(kPi)) - std::log(std::sin(kPi * z)) - lgamma_scalar(1.0 - z);
  }
  const Complex w = z - 1.0;
  const Complex t = w + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (w + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

Complex gamma_ratio(Complex num, Complex den) {
  if (near_nonpositive_integer(den)) return Complex(0.0);  // 1/Gamma vanishes
  return std::exp(lgamma_scalar(num) - lgamma_scalar(den));
}

Complex scaled_gamma_scalar(Complex z) {
  // lgamma(z) + z - (z - 1/2) log z - log sqrt(2 pi)
  const Complex e = lgamma_scalar(z) + z - (z - 0.5) * std::log(z) -
                    0.5 * std::log(2.0 * kPi);
  return std::exp(e);
}

double zeta_int(int n) {
  if (n < 1) raise(ErrorCode::invalid_argument, "zeta_int needs n >= 1");
  if (n == 1) return std::numeric_limits<double>::infinity();
  return std::riemann_zeta(static_cast<double>(n));
}

Complex pochhammer(Complex x, int n) {
  if (n < 0) raise(ErrorCode::invalid_argument, "pochhammer needs n >= 0");
  Complex p(1.0);
  for (int k = 0; k < n; ++k) p *= x + Complex(k, 0);
  return p;
}

namespace {

// Common ascending-series kernel: sum_k s^k (z/2)^{nu+2k} / (k! Gamma(nu+k+1))
// with s = -1 (J) or +1 (I). First term through lgamma to survive large nu.
Complex bessel_series(Complex nu, Complex z, double sign) {
  const Complex half_z = 0.5 * z;
  Complex term = std::exp(nu * std::log(half_z) - lgamma_scalar(nu + 1.0));
  Complex sum = term;
  const Complex q = sign * half_z * half_z;
  for (int k = 0; k < 400; ++k) {
    term *= q / (Complex(k + 1, 0) * (nu + Complex(k + 1, 0)));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  raise(ErrorCode::no_convergence, "Bessel series did not converge");
}

}  // namespace

Complex bessel_j_series(Complex nu, Complex z) { return bessel_series(nu, z, -1.0); }

Complex bessel_i_series(Complex nu, Complex z) { return bessel_series(nu, z, +1.0); }

Complex kummer_scalar(Complex a, Complex b, Complex z) {
  if (near_nonpositive_integer(b)) {
    raise(ErrorCode::invalid_argument, "1F1 parameter b is a nonpositive integer");
  }
  Complex term(1.0), sum(1.0);
  for (int n = 0; n < 10000; ++n) {
    term *= (a + Complex(n, 0)) / (b + Complex(n, 0)) * z / Complex(n + 1, 0);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && n > 3) return sum;
  }
  raise(ErrorCode::no_convergence, "1F1 series did not converge");
}

Complex kummer_scalar_stable(Complex a, Complex b, Complex z) {
  if (z.real() < 0.0) {
    return std::exp(z) * kummer_scalar(b - a, b, -z);
  }
  return kummer_scalar(a, b, z);
}

double exp_e1(double x) {
  if (x <= 0.0) raise(ErrorCode::invalid_argument, "exp_e1 needs x > 0");
  // e^x E_1(x) = 1/(x+1- 1/(x+3- 4/(x+5- 9/(x+7- ...)))), a_k = -k^2.
  const double tiny = 1e-300;
  double f = tiny, c = f, d = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double bk = x + (2.0 * k + 1.0);
    const double ak = (k == 0) ? 1.0 : -static_cast<double>(k) * k;
    d = bk + ak * d;
    if (d == 0.0) d = tiny;
    c = bk + ak / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return f;
  }
  raise(ErrorCode::no_convergence, "E1 continued fraction did not converge");
}

}  // namespace matasym
