#include "matasym/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "matasym/errors.hpp"

namespace matasym {

namespace {

// Gauss-Kronrod 15(7) nodes/weights on [-1,1] (QUADPACK dqk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double err;
  ComplexMatrix value;
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

Panel evaluate_panel(const MatrixIntegrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<ComplexMatrix, 15> fx;
  for (int i = 0; i < 7; ++i) {
    fx[i] = f(c - h * kXgk[i]);
    fx[14 - i] = f(c + h * kXgk[i]);
  }
  fx[7] = f(c);

  ComplexMatrix kronrod = kWgk[7] * fx[7];
  for (int i = 0; i < 7; ++i) kronrod += kWgk[i] * (fx[i] + fx[14 - i]);

  // Gauss-7 uses the odd Kronrod nodes (indices 1,3,5) plus the center.
  ComplexMatrix gauss = kWg[3] * fx[7];
  for (int i = 0; i < 3; ++i) {
    gauss += kWg[i] * (fx[2 * i + 1] + fx[13 - 2 * i]);
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * kronrod;
  p.err = h * (kronrod - gauss).cwiseAbs().maxCoeff();
  return p;
}

}  // namespace

ComplexMatrix integrate_adaptive(const MatrixIntegrand& f, double a, double b,
                                 const QuadratureOptions& opts) {
  if (!(b > a)) raise(ErrorCode::invalid_argument, "integration bounds need b > a");
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;

  // Seed with a few panels so one lucky Kronrod estimate cannot end it early.
  const int seed_panels = 8;
  double total_err = 0.0;
  for (int i = 0; i < seed_panels; ++i) {
    const double lo = a + (b - a) * i / seed_panels;
    const double hi = a + (b - a) * (i + 1) / seed_panels;
    Panel p = evaluate_panel(f, lo, hi);
    total_err += p.err;
    queue.push(std::move(p));
  }

  int panels = seed_panels;
  while (total_err > opts.abs_tol && panels < opts.max_panels) {
    Panel worst = queue.top();
    if (worst.err <= 0.0) break;  // only accounting drift remains
    queue.pop();
    total_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at rounding resolution; keep its estimate and stop splitting.
      worst.err = 0.0;
      queue.push(std::move(worst));
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    total_err += left.err + right.err;
    queue.push(std::move(left));
    queue.push(std::move(right));
    ++panels;
  }
  if (total_err > opts.abs_tol * 10.0) {
    raise(ErrorCode::not_convergent, "quadrature panel budget exhausted");
  }

  ComplexMatrix sum;
  bool first = true;
  while (!queue.empty()) {
    if (first) {
      sum = queue.top().value;
      first = false;
    } else {
      sum += queue.top().value;
    }
    queue.pop();
  }
  return sum;
}

Complex integrate_adaptive_scalar(const ScalarIntegrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
  MatrixIntegrand wrap = [&f](double t) {
    ComplexMatrix m(1, 1);
    m(0, 0) = f(t);
    return m;
  };
  return integrate_adaptive(wrap, a, b, opts)(0, 0);
}

MatrixIntegrand substitute_power(const MatrixIntegrand& f, double a, int power) {
  if (power < 1) raise(ErrorCode::invalid_argument, "substitution power must be >= 1");
  if (power == 1) return [f, a](double u) { return f(a + u); };
  const double p = power;
  return [f, a, p](double u) {
    return ComplexMatrix(p * std::pow(u, p - 1.0) * f(a + std::pow(u, p)));
  };
}

double tail_cutoff(const std::function<double(double)>& envelope, double floor_value,
                   double start, double limit) {
  double t = std::max(start, 1.0);
  while (t < limit && envelope(t) >= floor_value) t *= 2.0;
  return std::min(t, limit);
}

}  // namespace matasym
