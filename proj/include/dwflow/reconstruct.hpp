#pragma once

// Interface-value reconstruction: piecewise constant/linear with the
// generalized minmod limiter, and WENO-Z interpolation of point values in
// local characteristic variables.

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "dwflow/euler.hpp"
#include "dwflow/grid.hpp"

namespace dwflow {

inline constexpr double kDefaultTheta = 1.3;

/// min if all arguments are positive, max if all are negative, else 0.
inline double minmod(std::initializer_list<double> z) noexcept {
  if (z.size() == 0) return 0.0;
  const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
  if (*lo > 0.0) return *lo;
  if (*hi < 0.0) return *hi;
  return 0.0;
}

inline double minmod3(double a, double b, double c) noexcept {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

/// Limited slope of the middle value times the mesh size:
/// minmod(theta*(c - b), (c - a)/2, theta*(b - a)).
inline double limited_difference(double a, double b, double c, double theta) noexcept {
  return minmod3(theta * (c - b), 0.5 * (c - a), theta * (b - a));
}

/// Per-cell slopes (U_x, U_y) for cells -1..nx and -1..ny (one ring of
/// ghosts, enough to build every interior interface).
struct Slopes {
  Grid grid{};
  std::vector<Vec4> ux;
  std::vector<Vec4> uy;

  std::size_t index(int j, int k) const noexcept {
    return static_cast<std::size_t>((k + 1) * (grid.nx + 2) + (j + 1));
  }
  const Vec4& x(int j, int k) const noexcept { return ux[index(j, k)]; }
  const Vec4& y(int j, int k) const noexcept { return uy[index(j, k)]; }
};

/// Componentwise generalized-minmod slopes. Requires ghost width >= 2.
Slopes minmod_slopes(const Field& f, double theta = kDefaultTheta);

/// Zero slopes (first-order, piecewise constant reconstruction).
Slopes zero_slopes(const Grid& grid);

/// One-sided values at cell interfaces. The x pair (minus, plus) at
/// interface j+1/2 of row k is stored for j = -1-extra .. nx-1+extra; the
/// y pair at k+1/2 of column j for k = -1-extra .. ny-1+extra.
struct InterfaceValues {
  Grid grid{};
  int extra = 0;
  std::vector<Conserved> x_minus, x_plus, y_minus, y_plus;

  int x_count() const noexcept { return grid.nx + 1 + 2 * extra; }
  int y_count() const noexcept { return grid.ny + 1 + 2 * extra; }
  std::size_t xi(int j, int k) const noexcept {
    return static_cast<std::size_t>(k) * x_count() + static_cast<std::size_t>(j + 1 + extra);
  }
  std::size_t yi(int j, int k) const noexcept {
    return static_cast<std::size_t>(j) * y_count() + static_cast<std::size_t>(k + 1 + extra);
  }

  void resize(const Grid& g, int ext);
};

/// U at the interface midpoints: cell average +- (h/2) * slope.
InterfaceValues linear_interface_values(const Field& f, const Slopes& slopes);

/// Eigen-decomposition of the Euler flux Jacobian at the arithmetic mean of
/// two states. Columns of `right` are right eigenvectors ordered by the
/// eigenvalues (un - c, un, un, un + c); `left` is its inverse.
struct CharBasis {
  Conserved average{};
  std::array<std::array<double, 4>, 4> right{};
  std::array<std::array<double, 4>, 4> left{};
  Vec4 eigenvalues{};

  Vec4 project(const Vec4& q) const noexcept {
    Vec4 w{};
    for (int a = 0; a < 4; ++a)
      w[a] = left[a][0] * q[0] + left[a][1] * q[1] + left[a][2] * q[2] + left[a][3] * q[3];
    return w;
  }
  Vec4 lift(const Vec4& w) const noexcept {
    Vec4 q{};
    for (int a = 0; a < 4; ++a)
      q[a] = right[a][0] * w[0] + right[a][1] * w[1] + right[a][2] * w[2] + right[a][3] * w[3];
    return q;
  }
};

/// Throws InvalidState when the averaged state is inadmissible.
CharBasis char_basis(const Conserved& left, const Conserved& right, Axis axis, const GasModel& gas);

namespace detail {

/// Fills `b` for the admissible average state `q`; `n` is the normal
/// momentum index (1 for x, 2 for y). No validation.
inline void fill_char_basis(const Vec4& q, int n, double gamma, CharBasis& b) noexcept {
  const int t = 3 - n;
  b.average.q = q;
  const double rho = q[0];
  const double un = q[n] / rho;
  const double ut = q[t] / rho;
  const double q2 = un * un + ut * ut;
  const double p = pressure(q, gamma);
  const double c = std::sqrt(gamma * p / rho);
  const double H = (q[3] + p) / rho;
  const double b1 = (gamma - 1.0) / (c * c);
  const double b2 = 0.5 * q2 * b1;
  const double ic = 1.0 / c;

  // Written in (rho, m_normal, m_tangential, E) order, then permuted.
  const double R[4][4] = {
      {1.0, 1.0, 0.0, 1.0},
      {un - c, un, 0.0, un + c},
      {ut, ut, 1.0, ut},
      {H - un * c, 0.5 * q2, ut, H + un * c},
  };
  const double L[4][4] = {
      {0.5 * (b2 + un * ic), 0.5 * (-b1 * un - ic), -0.5 * b1 * ut, 0.5 * b1},
      {1.0 - b2, b1 * un, b1 * ut, -b1},
      {-ut, 0.0, 1.0, 0.0},
      {0.5 * (b2 - un * ic), 0.5 * (-b1 * un + ic), -0.5 * b1 * ut, 0.5 * b1},
  };
  const int map[4] = {0, n, t, 3};
  for (int a = 0; a < 4; ++a)
    for (int col = 0; col < 4; ++col) {
      b.right[map[a]][col] = R[a][col];
      b.left[col][map[a]] = L[col][a];
    }
  b.eigenvalues = {un - c, un, un, un + c};
}

}  // namespace detail

/// Slope-limited interface values computed in the local characteristic
/// fields of each interface (the basis is rebuilt per interface from its two
/// neighbours). Requires ghost width >= 2.
InterfaceValues characteristic_linear_interface_values(const Field& f, const GasModel& gas,
                                                      double theta = kDefaultTheta);

/// Which edge of the stencil's center cell to interpolate to.
enum class Side {
  minus,  // right edge x_{j+1/2}: the value U^- of that interface
  plus,   // left edge x_{j-1/2}: the value U^+ of that interface
};

/// WENO-Z interpolation of an odd-length stencil of point values centered on
/// cell j. Throws ConfigError if the stencil length does not equal `order`.
double weno_interpolate(std::span<const double> stencil, int order, Side side);

/// WENO interpolation of the conserved point values in local characteristic
/// variables at every interface, with `extra` interfaces beyond each side
/// (the reach of the high-order flux correction).
InterfaceValues weno_interface_values(const Field& f, int order, const GasModel& gas, int extra);

}  // namespace dwflow
