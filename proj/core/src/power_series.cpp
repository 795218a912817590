#include "matasym/power_series.hpp"

#include <cmath>

#include "matasym/errors.hpp"

namespace matasym {

namespace {

using C = std::complex<double>;

C at(const Series& s, std::size_t k) { return k < s.size() ? s[k] : C(0.0); }

}  // namespace

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series c(n, C(0.0));
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == C(0.0)) continue;
    for (std::size_t j = 0; j + i < n && j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

Series series_div(const Series& a, const Series& b, std::size_t n) {
  if (b.empty() || b[0] == C(0.0)) {
    raise(ErrorCode::invalid_argument, "series division needs b[0] != 0");
  }
  Series q(n, C(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    C acc = at(a, k);
    for (std::size_t j = 1; j <= k; ++j) acc -= at(b, j) * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Series series_pow(const Series& p, C alpha, std::size_t n) {
  if (p.empty() || p[0] == C(0.0)) {
    raise(ErrorCode::invalid_argument, "series power needs p[0] != 0");
  }
  Series q(n, C(0.0));
  q[0] = std::pow(p[0], alpha);
  for (std::size_t k = 1; k < n; ++k) {
    C acc(0.0);
    for (std::size_t j = 1; j <= k; ++j) {
      acc += (alpha * C(static_cast<double>(j)) -
              C(static_cast<double>(k - j))) *
             at(p, j) * q[k - j];
    }
    q[k] = acc / (C(static_cast<double>(k)) * p[0]);
  }
  return q;
}

Series series_exp(const Series& s, std::size_t n) {
  if (!s.empty() && s[0] != C(0.0)) {
    raise(ErrorCode::invalid_argument, "series exp needs s[0] == 0");
  }
  Series q(n, C(0.0));
  if (n == 0) return q;
  q[0] = C(1.0);
  // q' = s' q  =>  k q_k = sum_{j=1..k} j s_j q_{k-j}
  for (std::size_t k = 1; k < n; ++k) {
    C acc(0.0);
    for (std::size_t j = 1; j <= k; ++j) {
      acc += C(static_cast<double>(j)) * at(s, j) * q[k - j];
    }
    q[k] = acc / C(static_cast<double>(k));
  }
  return q;
}

Series series_compose(const Series& f, const Series& g, std::size_t n) {
  if (!g.empty() && g[0] != C(0.0)) {
    raise(ErrorCode::invalid_argument, "series composition needs g[0] == 0");
  }
  // Horner on truncated series.
  Series result(n, C(0.0));
  if (f.empty()) return result;
  const std::size_t m = std::min(f.size(), n + 1);
  result[0] = f[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) {
    result = series_mul(result, g, n);
    result[0] += f[i];
  }
  return result;
}

Series series_revert(const Series& d, std::size_t n) {
  if (d.size() < 2 || d[0] != C(0.0) || d[1] == C(0.0)) {
    raise(ErrorCode::invalid_argument,
          "series reversion needs d = d1 u + ... with d1 != 0");
  }
  Series e(n + 1, C(0.0));
  if (n == 0) return e;
  e[1] = C(1.0) / d[1];
  for (std::size_t k = 2; k <= n; ++k) {
    // With e_k unknown, [v^k] d(e(v)) = d1 e_k + (known); solve for e_k.
    Series composed = series_compose(d, e, k + 1);
    e[k] = -composed[k] / d[1];
  }
  return e;
}

}  // namespace matasym
