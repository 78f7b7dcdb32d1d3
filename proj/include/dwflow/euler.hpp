#pragma once

// Gas model, state conversions, physical fluxes, and wave speeds for the
// two-dimensional Euler equations of a polytropic gas.

#include <array>
#include <cmath>
#include <cstddef>

namespace dwflow {

using Vec4 = std::array<double, 4>;

enum class Axis { x, y };

/// States with density or pressure at or below this floor are rejected.
inline constexpr double kAdmissibilityFloor = 1e-12;

struct GasModel {
  double gamma = 1.4;

  double cv() const noexcept { return 1.0 / (gamma - 1.0); }

  /// Throws ConfigError unless gamma > 1.
  static GasModel with_gamma(double gamma);
};

/// Conserved variables (rho, rho*u, rho*v, E), stored contiguously so a
/// field of states is a plain array of doubles.
struct Conserved {
  Vec4 q{};

  constexpr double rho() const noexcept { return q[0]; }
  constexpr double mx() const noexcept { return q[1]; }
  constexpr double my() const noexcept { return q[2]; }
  constexpr double E() const noexcept { return q[3]; }

  constexpr double& operator[](std::size_t i) noexcept { return q[i]; }
  constexpr double operator[](std::size_t i) const noexcept { return q[i]; }

  friend constexpr bool operator==(const Conserved&, const Conserved&) = default;
};

struct Primitive {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
};

struct WaveSpeeds {
  double ax = 0.0;  // |u| + c
  double ay = 0.0;  // |v| + c
};

// Vec4 arithmetic used throughout the flux code.
constexpr Vec4 operator+(const Vec4& a, const Vec4& b) noexcept {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
constexpr Vec4 operator-(const Vec4& a, const Vec4& b) noexcept {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
constexpr Vec4 operator*(double s, const Vec4& a) noexcept {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

Primitive cons_to_prim(const Conserved& U, const GasModel& gas);
Conserved prim_to_cons(const Primitive& W, const GasModel& gas);

Vec4 phys_flux(const Conserved& U, Axis axis, const GasModel& gas);
inline Vec4 phys_flux_x(const Conserved& U, const GasModel& gas) { return phys_flux(U, Axis::x, gas); }
inline Vec4 phys_flux_y(const Conserved& U, const GasModel& gas) { return phys_flux(U, Axis::y, gas); }

/// Total entropy S = cv * rho * ln(p / rho^gamma).
double entropy_density(const Conserved& U, const GasModel& gas);

WaveSpeeds max_wave_speeds(const Conserved& U, const GasModel& gas);

/// True when rho and p both exceed kAdmissibilityFloor (NaN is inadmissible).
bool is_admissible(const Conserved& U, const GasModel& gas) noexcept;

// Unchecked helpers for the inner loops. Callers validate states in bulk.
namespace detail {

inline double pressure(const Vec4& q, double gamma) noexcept {
  return (gamma - 1.0) * (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0]);
}

/// Physical flux in the direction whose momentum component is `n`
/// (1 for x, 2 for y).
inline Vec4 flux_along(const Vec4& q, int n, double gamma) noexcept {
  const double p = pressure(q, gamma);
  const double un = q[n] / q[0];
  Vec4 f{q[n], un * q[1], un * q[2], un * (q[3] + p)};
  f[n] += p;
  return f;
}

}  // namespace detail

}  // namespace dwflow
