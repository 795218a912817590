#ifndef MATASYM_POWER_SERIES_HPP
#define MATASYM_POWER_SERIES_HPP

#include <complex>
#include <vector>

namespace matasym {

// Truncated formal power series in one variable, coefficient of x^k at
// index k. All operations truncate to the shorter relevant length; callers
// pass the order they need. Double-precision coefficients, max useful order
// around 16 for the reversion pipeline.
using Series = std::vector<std::complex<double>>;

Series series_mul(const Series& a, const Series& b, std::size_t n);

// a / b with b[0] != 0.
Series series_div(const Series& a, const Series& b, std::size_t n);

// p^alpha for p[0] != 0 (J.C.P. Miller recurrence); alpha may be complex.
Series series_pow(const Series& p, std::complex<double> alpha, std::size_t n);

// exp of a series with zero constant term.
Series series_exp(const Series& s, std::size_t n);

// f(g(x)) with g[0] == 0.
Series series_compose(const Series& f, const Series& g, std::size_t n);

// Compositional inverse: given v = d1 u + d2 u^2 + ... with d1 != 0, returns
// e with u = e1 v + e2 v^2 + ... so that d(e(v)) = v through order n.
Series series_revert(const Series& d, std::size_t n);

}  // namespace matasym

#endif  // MATASYM_POWER_SERIES_HPP
