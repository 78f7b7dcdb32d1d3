#include <string>

#include "dwflow/errors.hpp"
#include "dwflow/rhs.hpp"

namespace dwflow {

void validate(const SchemeSpec& scheme) {
  halo_width(scheme.order);
  if (!(scheme.gas.gamma > 1.0)) throw ConfigError("gamma must exceed 1");
  if (!(scheme.theta >= 1.0 && scheme.theta <= 2.0)) {
    throw ConfigError("minmod parameter must lie in [1, 2]");
  }
}

InterfaceValues interface_values(const Field& f, const SchemeSpec& scheme) {
  InterfaceValues iv;
  if (scheme.order == 1) {
    iv = linear_interface_values(f, zero_slopes(f.grid()));
  } else if (scheme.order == 2) {
    iv = scheme.family == FluxFamily::lcdcu
             ? characteristic_linear_interface_values(f, scheme.gas, scheme.theta)
             : linear_interface_values(f, minmod_slopes(f, scheme.theta));
  } else {
    iv = weno_interface_values(f, scheme.order, scheme.gas, correction_reach(scheme.order));
  }

  const Grid& g = f.grid();
  const int e = iv.extra;
  for (int k = 0; k < g.ny; ++k)
    for (int j = -1 - e; j < g.nx + e; ++j) {
      const std::size_t i = iv.xi(j, k);
      iv.x_minus[i] = admissible_or(iv.x_minus[i], f(j, k), scheme.gas);
      iv.x_plus[i] = admissible_or(iv.x_plus[i], f(j + 1, k), scheme.gas);
    }
  for (int j = 0; j < g.nx; ++j)
    for (int k = -1 - e; k < g.ny + e; ++k) {
      const std::size_t i = iv.yi(j, k);
      iv.y_minus[i] = admissible_or(iv.y_minus[i], f(j, k), scheme.gas);
      iv.y_plus[i] = admissible_or(iv.y_plus[i], f(j, k + 1), scheme.gas);
    }
  return iv;
}

namespace {

void require_halo(const Field& f, const SchemeSpec& scheme) {
  validate(scheme);
  if (f.grid().ghost < halo_width(scheme.order)) {
    throw ConfigError("ghost width " + std::to_string(f.grid().ghost) + " is below the halo of order " +
                      std::to_string(scheme.order));
  }
}

// Divergence of interface fluxes stored with the InterfaceValues layout
// (extra = 0).
Tendency divergence(const Grid& g, const std::vector<Vec4>& fx, const std::vector<Vec4>& gy,
                    const InterfaceValues& layout) {
  Tendency out(g.cells());
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) {
      const Vec4 dfx = fx[layout.xi(j, k)] - fx[layout.xi(j - 1, k)];
      const Vec4 dgy = gy[layout.yi(j, k)] - gy[layout.yi(j, k - 1)];
      Vec4& r = out[static_cast<std::size_t>(k) * g.nx + j];
      for (int c = 0; c < 4; ++c) r[c] = -dfx[c] / g.dx - dgy[c] / g.dy;
    }
  return out;
}

}  // namespace

Tendency fv_rhs(const Field& f, const SchemeSpec& scheme) {
  require_halo(f, scheme);
  if (scheme.finite_difference()) throw ConfigError("fv_rhs handles orders 1 and 2 only");
  const Grid& g = f.grid();
  const InterfaceValues iv = interface_values(f, scheme);

  std::vector<Vec4> fx(iv.x_minus.size()), gy(iv.y_minus.size());
  for (std::size_t i = 0; i < fx.size(); ++i)
    fx[i] = numerical_flux(scheme.family, iv.x_minus[i], iv.x_plus[i], Axis::x, scheme.gas);
  for (std::size_t i = 0; i < gy.size(); ++i)
    gy[i] = numerical_flux(scheme.family, iv.y_minus[i], iv.y_plus[i], Axis::y, scheme.gas);

  Tendency out = divergence(g, fx, gy, iv);
  if (scheme.family == FluxFamily::vfv && scheme.order == 1) {
    const std::vector<double> energy = vfv_first_order_energy_rhs(f, scheme.gas);
    for (std::size_t i = 0; i < out.size(); ++i) out[i][3] = energy[i];
  }
  return out;
}

Tendency fd_rhs(const Field& f, const SchemeSpec& scheme) {
  require_halo(f, scheme);
  if (!scheme.finite_difference()) throw ConfigError("fd_rhs handles orders 3, 5, 7, 9 only");
  const Grid& g = f.grid();
  const InterfaceValues iv = interface_values(f, scheme);
  const int e = iv.extra;

  InterfaceValues layout;
  layout.grid = g;
  std::vector<Vec4> fx(static_cast<std::size_t>(g.nx + 1) * g.ny);
  std::vector<Vec4> gy(static_cast<std::size_t>(g.ny + 1) * g.nx);

  std::vector<Vec4> line;
  for (int k = 0; k < g.ny; ++k) {
    line.clear();
    for (int j = -1 - e; j < g.nx + e; ++j) {
      const std::size_t i = iv.xi(j, k);
      line.push_back(numerical_flux(scheme.family, iv.x_minus[i], iv.x_plus[i], Axis::x, scheme.gas));
    }
    const std::vector<Vec4> corrected = correction_high_order(line, scheme.order, g.dx);
    for (int j = -1; j < g.nx; ++j) fx[layout.xi(j, k)] = corrected[j + 1];
  }
  for (int j = 0; j < g.nx; ++j) {
    line.clear();
    for (int k = -1 - e; k < g.ny + e; ++k) {
      const std::size_t i = iv.yi(j, k);
      line.push_back(numerical_flux(scheme.family, iv.y_minus[i], iv.y_plus[i], Axis::y, scheme.gas));
    }
    const std::vector<Vec4> corrected = correction_high_order(line, scheme.order, g.dy);
    for (int k = -1; k < g.ny; ++k) gy[layout.yi(j, k)] = corrected[k + 1];
  }
  return divergence(g, fx, gy, layout);
}

Tendency reference_rhs(const Field& f, const SchemeSpec& scheme) {
  return scheme.finite_difference() ? fd_rhs(f, scheme) : fv_rhs(f, scheme);
}

}  // namespace dwflow
