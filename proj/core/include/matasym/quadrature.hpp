#ifndef MATASYM_QUADRATURE_HPP
#define MATASYM_QUADRATURE_HPP

#include <functional>

#include "matasym/matrix.hpp"

namespace matasym {

using MatrixIntegrand = std::function<ComplexMatrix(double)>;
using ScalarIntegrand = std::function<Complex(double)>;

struct QuadratureOptions {
  double abs_tol = 1e-12;   // entrywise absolute target for the whole integral
  int max_panels = 50000;   // subdivision budget before NotConvergent
};

// Adaptive Gauss-Kronrod 15(7) with global worst-panel refinement.
// The error metric is the max-abs entry of the K15-G7 difference; panels are
// split until the summed estimates drop below abs_tol.
ComplexMatrix integrate_adaptive(const MatrixIntegrand& f, double a, double b,
                                 const QuadratureOptions& opts = {});

Complex integrate_adaptive_scalar(const ScalarIntegrand& f, double a, double b,
                                  const QuadratureOptions& opts = {});

// Map an integrand on (a, a+width) through t = a + u^power (power >= 1),
// which flattens algebraic endpoint behavior t^{alpha-1} at t = a.
MatrixIntegrand substitute_power(const MatrixIntegrand& f, double a, int power);

// Smallest T with envelope(T) < floor, found by doubling from `start`;
// envelope must be eventually decreasing. Capped at `limit`.
double tail_cutoff(const std::function<double(double)>& envelope, double floor_value,
                   double start, double limit = 1e6);

}  // namespace matasym

#endif  // MATASYM_QUADRATURE_HPP
