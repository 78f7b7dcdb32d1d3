#pragma once

// Numerical interface fluxes: the viscous finite-volume (VFV) flux and a
// central-upwind flux used for both the LCDCU and LDCU families.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "dwflow/euler.hpp"
#include "dwflow/grid.hpp"

namespace dwflow {

enum class FluxFamily { lcdcu, ldcu, vfv };

std::string_view to_string(FluxFamily family) noexcept;

/// Accepts "lcdcu", "ldcu", "vfv" (any case); throws ConfigError otherwise.
FluxFamily parse_flux_family(std::string_view name);

/// Upwind part of the VFV flux:
/// 1/4 (un- + un+)(U- + U+) - 1/4 (|un- + un+| + 4)(U+ - U-).
Vec4 vfv_upwind(const Conserved& Um, const Conserved& Up, Axis axis, const GasModel& gas);

/// Full VFV flux in the given direction.
Vec4 vfv_flux(const Conserved& Um, const Conserved& Up, Axis axis, const GasModel& gas);
inline Vec4 vfv_flux_x(const Conserved& Um, const Conserved& Up, const GasModel& gas) {
  return vfv_flux(Um, Up, Axis::x, gas);
}
inline Vec4 vfv_flux_y(const Conserved& Um, const Conserved& Up, const GasModel& gas) {
  return vfv_flux(Um, Up, Axis::y, gas);
}

/// Central-upwind flux with one-sided local speeds.
Vec4 cu_flux(const Conserved& Um, const Conserved& Up, Axis axis, const GasModel& gas);

Vec4 numerical_flux(FluxFamily family, const Conserved& Um, const Conserved& Up, Axis axis,
                    const GasModel& gas);

/// Energy tendency of the first-order VFV scheme for every interior cell
/// (row-major, k outer). Requires ghost width >= 1.
std::vector<double> vfv_first_order_energy_rhs(const Field& f, const GasModel& gas);

namespace detail {

inline constexpr double kCuSpeedGap = 1e-10;

inline Vec4 vfv_upwind_along(const Vec4& qm, const Vec4& qp, int n) noexcept {
  const double s = qm[n] / qm[0] + qp[n] / qp[0];
  const double a = 0.25 * s;
  const double d = 0.25 * (std::abs(s) + 4.0);
  Vec4 f{};
  for (int c = 0; c < 4; ++c) f[c] = a * (qm[c] + qp[c]) - d * (qp[c] - qm[c]);
  return f;
}

inline Vec4 vfv_flux_along(const Vec4& qm, const Vec4& qp, int n, double gamma) noexcept {
  const int t = 3 - n;
  Vec4 f = vfv_upwind_along(qm, qp, n);
  const double unm = qm[n] / qm[0], unp = qp[n] / qp[0];
  const double utm = qm[t] / qm[0], utp = qp[t] / qp[0];
  const double pm = pressure(qm, gamma), pp = pressure(qp, gamma);
  f[n] += 0.5 * (pm + pp) - (unp - unm);
  f[t] -= utp - utm;
  f[3] += 0.5 * (unm * pm + unp * pp) - 0.5 * (unp * unp + utp * utp - unm * unm - utm * utm);
  return f;
}

inline Vec4 cu_flux_along(const Vec4& qm, const Vec4& qp, int n, double gamma) noexcept {
  const double pm = pressure(qm, gamma), pp = pressure(qp, gamma);
  const double cm = std::sqrt(gamma * pm / qm[0]), cp = std::sqrt(gamma * pp / qp[0]);
  const double unm = qm[n] / qm[0], unp = qp[n] / qp[0];
  const double ap = std::max({unm + cm, unp + cp, 0.0});
  const double am = std::min({unm - cm, unp - cp, 0.0});
  const Vec4 fm = flux_along(qm, n, gamma);
  const Vec4 fp = flux_along(qp, n, gamma);
  const double gap = ap - am;
  Vec4 f{};
  if (gap < kCuSpeedGap) {
    for (int c = 0; c < 4; ++c) f[c] = 0.5 * (fm[c] + fp[c]);
    return f;
  }
  const double wf = am / gap;
  const double wu = ap * am / gap;
  for (int c = 0; c < 4; ++c) f[c] = fm[c] + wf * (fm[c] - fp[c]) + wu * (qp[c] - qm[c]);
  return f;
}

}  // namespace detail

}  // namespace dwflow
