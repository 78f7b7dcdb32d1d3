#include "dwflow/reconstruct.hpp"

#include <cmath>
#include <string>

#include "dwflow/errors.hpp"
#include "dwflow/weno_table.hpp"

namespace dwflow {

Slopes zero_slopes(const Grid& grid) {
  Slopes s;
  s.grid = grid;
  const std::size_t n = static_cast<std::size_t>(grid.nx + 2) * (grid.ny + 2);
  s.ux.assign(n, Vec4{});
  s.uy.assign(n, Vec4{});
  return s;
}

Slopes minmod_slopes(const Field& f, double theta) {
  const Grid& g = f.grid();
  if (g.ghost < 2) throw ConfigError("minmod slopes need two ghost layers");
  Slopes s = zero_slopes(g);
  for (int k = -1; k <= g.ny; ++k)
    for (int j = -1; j <= g.nx; ++j) {
      Vec4& sx = s.ux[s.index(j, k)];
      Vec4& sy = s.uy[s.index(j, k)];
      for (int c = 0; c < 4; ++c) {
        sx[c] = limited_difference(f(j - 1, k)[c], f(j, k)[c], f(j + 1, k)[c], theta) / g.dx;
        sy[c] = limited_difference(f(j, k - 1)[c], f(j, k)[c], f(j, k + 1)[c], theta) / g.dy;
      }
    }
  return s;
}

void InterfaceValues::resize(const Grid& g, int ext) {
  grid = g;
  extra = ext;
  const std::size_t nxf = static_cast<std::size_t>(x_count()) * g.ny;
  const std::size_t nyf = static_cast<std::size_t>(y_count()) * g.nx;
  x_minus.assign(nxf, Conserved{});
  x_plus.assign(nxf, Conserved{});
  y_minus.assign(nyf, Conserved{});
  y_plus.assign(nyf, Conserved{});
}

InterfaceValues linear_interface_values(const Field& f, const Slopes& slopes) {
  const Grid& g = f.grid();
  InterfaceValues iv;
  iv.resize(g, 0);
  const double hx = 0.5 * g.dx;
  const double hy = 0.5 * g.dy;
  for (int k = 0; k < g.ny; ++k)
    for (int j = -1; j < g.nx; ++j) {
      const std::size_t i = iv.xi(j, k);
      iv.x_minus[i].q = f(j, k).q + hx * slopes.x(j, k);
      iv.x_plus[i].q = f(j + 1, k).q - hx * slopes.x(j + 1, k);
    }
  for (int j = 0; j < g.nx; ++j)
    for (int k = -1; k < g.ny; ++k) {
      const std::size_t i = iv.yi(j, k);
      iv.y_minus[i].q = f(j, k).q + hy * slopes.y(j, k);
      iv.y_plus[i].q = f(j, k + 1).q - hy * slopes.y(j, k + 1);
    }
  return iv;
}

CharBasis char_basis(const Conserved& left, const Conserved& right, Axis axis, const GasModel& gas) {
  CharBasis b;
  b.average.q = 0.5 * (left.q + right.q);
  if (!is_admissible(b.average, gas)) {
    throw InvalidState("inadmissible average state in characteristic decomposition");
  }
  detail::fill_char_basis(b.average.q, axis == Axis::x ? 1 : 2, gas.gamma, b);
  return b;
}

InterfaceValues characteristic_linear_interface_values(const Field& f, const GasModel& gas, double theta) {
  const Grid& g = f.grid();
  if (g.ghost < 2) throw ConfigError("characteristic slopes need two ghost layers");
  InterfaceValues iv;
  iv.resize(g, 0);

  auto one_interface = [&](const Conserved& a, const Conserved& b, const Conserved& c, const Conserved& d,
                           Axis axis, Conserved& minus, Conserved& plus) {
    const CharBasis basis = char_basis(b, c, axis, gas);
    const Vec4 wa = basis.project(a.q), wb = basis.project(b.q);
    const Vec4 wc = basis.project(c.q), wd = basis.project(d.q);
    Vec4 wm{}, wp{};
    for (int m = 0; m < 4; ++m) {
      wm[m] = wb[m] + 0.5 * limited_difference(wa[m], wb[m], wc[m], theta);
      wp[m] = wc[m] - 0.5 * limited_difference(wb[m], wc[m], wd[m], theta);
    }
    minus.q = basis.lift(wm);
    plus.q = basis.lift(wp);
  };

  for (int k = 0; k < g.ny; ++k)
    for (int j = -1; j < g.nx; ++j) {
      const std::size_t i = iv.xi(j, k);
      one_interface(f(j - 1, k), f(j, k), f(j + 1, k), f(j + 2, k), Axis::x, iv.x_minus[i], iv.x_plus[i]);
    }
  for (int j = 0; j < g.nx; ++j)
    for (int k = -1; k < g.ny; ++k) {
      const std::size_t i = iv.yi(j, k);
      one_interface(f(j, k - 1), f(j, k), f(j, k + 1), f(j, k + 2), Axis::y, iv.y_minus[i], iv.y_plus[i]);
    }
  return iv;
}

double weno_interpolate(std::span<const double> stencil, int order, Side side) {
  const weno::Table& t = weno::table(order);
  if (static_cast<int>(stencil.size()) != order) {
    throw ConfigError("WENO stencil of length " + std::to_string(stencil.size()) + " for order " +
                      std::to_string(order));
  }
  if (side == Side::minus) return weno::interpolate_right(stencil.data(), t);
  double mirrored[2 * weno::kMaxSub - 1];
  for (int i = 0; i < order; ++i) mirrored[i] = stencil[order - 1 - i];
  return weno::interpolate_right(mirrored, t);
}

InterfaceValues weno_interface_values(const Field& f, int order, const GasModel& gas, int extra) {
  const Grid& g = f.grid();
  const int half = (order - 1) / 2;
  weno::table(order);  // validates the order
  if (g.ghost < order + extra - half) {
    throw ConfigError("ghost width " + std::to_string(g.ghost) + " too small for order " + std::to_string(order));
  }
  InterfaceValues iv;
  iv.resize(g, extra);

  std::vector<Vec4> w(order + 1);
  std::vector<double> stencil(order);

  // Interface between cells `at(0)` and `at(1)`; at(s) returns the cell s
  // steps along the sweep from the left neighbour.
  auto one_interface = [&](auto&& at, Axis axis, Conserved& minus, Conserved& plus) {
    const CharBasis basis = char_basis(at(0), at(1), axis, gas);
    for (int i = 0; i <= order; ++i) w[i] = basis.project(at(i - half).q);
    Vec4 wm{}, wp{};
    for (int m = 0; m < 4; ++m) {
      for (int i = 0; i < order; ++i) stencil[i] = w[i][m];
      wm[m] = weno_interpolate(stencil, order, Side::minus);
      for (int i = 0; i < order; ++i) stencil[i] = w[i + 1][m];
      wp[m] = weno_interpolate(stencil, order, Side::plus);
    }
    minus.q = basis.lift(wm);
    plus.q = basis.lift(wp);
  };

  for (int k = 0; k < g.ny; ++k)
    for (int j = -1 - extra; j < g.nx + extra; ++j) {
      const std::size_t i = iv.xi(j, k);
      one_interface([&](int s) -> const Conserved& { return f(j + s, k); }, Axis::x, iv.x_minus[i],
                    iv.x_plus[i]);
    }
  for (int j = 0; j < g.nx; ++j)
    for (int k = -1 - extra; k < g.ny + extra; ++k) {
      const std::size_t i = iv.yi(j, k);
      one_interface([&](int s) -> const Conserved& { return f(j, k + s); }, Axis::y, iv.y_minus[i],
                    iv.y_plus[i]);
    }
  return iv;
}

}  // namespace dwflow
