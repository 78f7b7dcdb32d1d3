#pragma once

// Coefficient tables and the inner WENO-Z interpolation kernel. The tables
// are derived once from Lagrange polynomials on the candidate stencils, so
// every order uses the same construction.

#include <cmath>

namespace dwflow::weno {

inline constexpr int kMaxSub = 5;           // (9 + 1) / 2
inline constexpr double kEpsilon = 1e-12;   // smoothness regularization

/// Interpolation of point values at the right edge x = +1/2 of the center
/// cell of a (2K-1)-point stencil f[0..2K-2] centered on x = 0.
struct Table {
  int order = 0;  // 2K - 1
  int sub = 0;    // K, the number of candidate stencils and their width
  double coef[kMaxSub][kMaxSub]{};              // candidate s, point i -> value weight
  double optimal[2 * kMaxSub - 1]{};            // full-stencil interpolant at +1/2
  double linear[kMaxSub]{};                     // optimal (linear) weights d_s
  double beta[kMaxSub][kMaxSub][kMaxSub]{};     // smoothness quadratic forms
  double tau[kMaxSub]{};                        // global indicator combination
};

/// Table for order 3, 5, 7 or 9; throws ConfigError otherwise.
const Table& table(int order);

template <int K>
inline double interpolate_right(const double* f, const Table& t) noexcept {
  double value[K];
  double smooth[K];
  for (int s = 0; s < K; ++s) {
    const double* g = f + s;
    double p = 0.0;
    double b = 0.0;
    for (int i = 0; i < K; ++i) {
      p += t.coef[s][i] * g[i];
      double row = 0.0;
      for (int m = 0; m < K; ++m) row += t.beta[s][i][m] * g[m];
      b += g[i] * row;
    }
    value[s] = p;
    smooth[s] = b;
  }
  double tau = 0.0;
  for (int s = 0; s < K; ++s) tau += t.tau[s] * smooth[s];
  tau = std::abs(tau);

  double num = 0.0;
  double den = 0.0;
  for (int s = 0; s < K; ++s) {
    const double ratio = tau / (smooth[s] + kEpsilon);
    const double alpha = t.linear[s] * (1.0 + ratio * ratio);  // WENO-Z, power 2
    num += alpha * value[s];
    den += alpha;
  }
  return num / den;
}

/// Dispatch on the table's order.
inline double interpolate_right(const double* f, const Table& t) noexcept {
  switch (t.sub) {
    case 2: return interpolate_right<2>(f, t);
    case 3: return interpolate_right<3>(f, t);
    case 4: return interpolate_right<4>(f, t);
    default: return interpolate_right<5>(f, t);
  }
}

}  // namespace dwflow::weno
