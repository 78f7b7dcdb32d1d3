#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "dwflow/errors.hpp"
#include "dwflow/weno_table.hpp"

namespace dwflow::weno {

namespace {

using Poly = std::vector<double>;  // monomial coefficients, lowest degree first

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly derivative(const Poly& a) {
  if (a.size() <= 1) return {0.0};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = static_cast<double>(i) * a[i];
  return out;
}

double evaluate(const Poly& a, double x) {
  double v = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

// Integral over the center cell [-1/2, 1/2].
double integrate_center(const Poly& a) {
  double v = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const double hi = std::pow(0.5, static_cast<double>(n + 1));
    const double lo = std::pow(-0.5, static_cast<double>(n + 1));
    v += a[n] * (hi - lo) / static_cast<double>(n + 1);
  }
  return v;
}

// Lagrange basis polynomials through the integer nodes first..first+count-1.
std::vector<Poly> lagrange_basis(int first, int count) {
  std::vector<Poly> basis;
  for (int i = 0; i < count; ++i) {
    Poly p{1.0};
    const double xi = first + i;
    for (int m = 0; m < count; ++m) {
      if (m == i) continue;
      const double xm = first + m;
      p = multiply(p, Poly{-xm / (xi - xm), 1.0 / (xi - xm)});
    }
    basis.push_back(p);
  }
  return basis;
}

Table build(int order) {
  const int K = (order + 1) / 2;
  Table t;
  t.order = order;
  t.sub = K;

  // Stencil position i sits at x = i - (K - 1).
  const auto full = lagrange_basis(-(K - 1), order);
  for (int i = 0; i < order; ++i) t.optimal[i] = evaluate(full[i], 0.5);

  for (int s = 0; s < K; ++s) {
    const auto basis = lagrange_basis(s - (K - 1), K);
    for (int i = 0; i < K; ++i) t.coef[s][i] = evaluate(basis[i], 0.5);

    for (int i = 0; i < K; ++i)
      for (int m = 0; m < K; ++m) {
        double b = 0.0;
        Poly di = basis[i];
        Poly dm = basis[m];
        for (int l = 1; l < K; ++l) {
          di = derivative(di);
          dm = derivative(dm);
          b += integrate_center(multiply(di, dm));
        }
        t.beta[s][i][m] = b;
      }
  }

  // Position i is covered by candidates s <= i; the first K rows of the
  // triangular system fix the linear weights.
  for (int i = 0; i < K; ++i) {
    double rest = t.optimal[i];
    for (int s = 0; s < i; ++s) rest -= t.linear[s] * t.coef[s][i - s];
    t.linear[i] = rest / t.coef[i][0];
  }

  static constexpr std::array<std::array<double, kMaxSub>, 4> kTau{{
      {1.0, -1.0, 0.0, 0.0, 0.0},
      {1.0, 0.0, -1.0, 0.0, 0.0},
      {1.0, 3.0, -3.0, -1.0, 0.0},
      {1.0, 2.0, -6.0, 2.0, 1.0},
  }};
  for (int s = 0; s < K; ++s) t.tau[s] = kTau[K - 2][s];
  return t;
}

}  // namespace

const Table& table(int order) {
  static const std::array<Table, 4> tables{build(3), build(5), build(7), build(9)};
  switch (order) {
    case 3: return tables[0];
    case 5: return tables[1];
    case 7: return tables[2];
    case 9: return tables[3];
    default: throw ConfigError("no WENO interpolation of order " + std::to_string(order));
  }
}

}  // namespace dwflow::weno
