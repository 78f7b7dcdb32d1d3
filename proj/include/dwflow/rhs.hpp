#pragma once

// Semi-discrete right-hand sides. `rhs` is the production kernel (line
// sweeps, OpenMP over rows and columns); `reference_rhs` is a serial
// assembly from the whole-field reconstruction and flux functions, kept as
// the test oracle for the kernel.

#include <span>
#include <vector>

#include "dwflow/euler.hpp"
#include "dwflow/flux.hpp"
#include "dwflow/grid.hpp"
#include "dwflow/reconstruct.hpp"

namespace dwflow {

struct SchemeSpec {
  FluxFamily family = FluxFamily::ldcu;
  int order = 1;  // 1, 2 (finite volume) or 3, 5, 7, 9 (A-WENO)
  GasModel gas{};
  double theta = kDefaultTheta;

  bool finite_difference() const noexcept { return order >= 3; }
};

/// Throws ConfigError for unsupported orders or a bad limiter parameter.
void validate(const SchemeSpec& scheme);

/// Per-cell tendencies for the interior, row-major with k outer.
using Tendency = std::vector<Vec4>;

struct CorrectionCoeffs {
  static constexpr double mu2 = 1.0 / 24.0;
  static constexpr double mu4 = 7.0 / 5760.0;
  static constexpr double mu6 = 31.0 / 967680.0;
  static constexpr double mu8 = 127.0 / 154828800.0;
};

/// Number of interfaces the correction reaches on each side: 1, 2, 3, 4 for
/// orders 3, 5, 7, 9 and 0 for the finite-volume orders.
int correction_reach(int order);

/// Applies the high-order correction to a line of FV interface fluxes.
/// Returns line.size() - 2*reach corrected fluxes, one per interface whose
/// whole stencil lies in the line. Throws ConfigError if the line is too short.
std::vector<Vec4> correction_high_order(std::span<const Vec4> line, int order, double h);

/// The correction folded into a single stencil of 2*reach + 1 weights
/// (mesh size cancels), so the corrected flux is sum_i w_i F_{i - reach}.
std::span<const double> correction_weights(int order);

/// Interface values for the scheme, with the inadmissible-value fallback
/// applied (see `admissible_or`).
InterfaceValues interface_values(const Field& f, const SchemeSpec& scheme);

/// The reconstructed value if admissible, otherwise the adjacent cell state.
inline const Conserved& admissible_or(const Conserved& value, const Conserved& cell,
                                      const GasModel& gas) noexcept {
  return is_admissible(value, gas) ? value : cell;
}

/// Production kernel. Ghosts must be filled with width >= halo_width(order).
Tendency rhs(const Field& f, const SchemeSpec& scheme);

/// Serial reference; same contract as `rhs`.
Tendency reference_rhs(const Field& f, const SchemeSpec& scheme);

/// Finite-volume divergence for orders 1 and 2 (serial reference path).
Tendency fv_rhs(const Field& f, const SchemeSpec& scheme);

/// A-WENO divergence for orders 3, 5, 7, 9 (serial reference path).
Tendency fd_rhs(const Field& f, const SchemeSpec& scheme);

}  // namespace dwflow
