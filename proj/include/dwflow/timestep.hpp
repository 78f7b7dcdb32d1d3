#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dwflow/euler.hpp"
#include "dwflow/flux.hpp"
#include "dwflow/grid.hpp"
#include "dwflow/rhs.hpp"

namespace dwflow {

/// 0.45 for the central-upwind families, 0.1 for VFV.
double default_cfl(FluxFamily family) noexcept;

/// cfl * min over interior cells of min(dx/(|u|+c), dy/(|v|+c)), clipped to
/// t_final - t. Throws InvalidState on an inadmissible cell.
double compute_dt(const Field& f, double cfl, const GasModel& gas, double t, double t_final);

/// Diffusive limit of the VFV velocity viscosity. The jump terms act like a
/// viscosity dx/rho on u (and dy/rho on v), so forward Euler needs
/// dt <= min rho / (2 (1/dx + 1/dy)). Low-density states (Config 3's
/// south-west quadrant) hit this before the convective CFL at 0.1.
double vfv_viscous_dt(const Field& f);

/// Maps a ghost-filled field to interior tendencies.
using RhsOperator = std::function<Tendency(const Field&)>;

/// One SSP-RK3 step of size dt taken from time t. Ghosts are refilled before
/// each stage. Throws BlowUp (with the stage index 1..3 and the worst cell)
/// if a stage leaves an inadmissible state.
void ssprk3_step(Field& U, const RhsOperator& L, double dt, double t, const GasModel& gas);

struct StepInfo {
  long step = 0;   // 1-based index of the accepted step
  double t = 0.0;  // time after the step
  double dt = 0.0;
};

struct IntegrationResult {
  double t = 0.0;
  long steps = 0;
};

/// Integrates from t0 to t_final. Steps are shortened to land exactly on
/// every time in `stops` (sorted, inside (t0, t_final]). `on_step` runs after
/// every accepted step. `extra_limit`, if set, caps every step from above.
IntegrationResult integrate(Field& U, const RhsOperator& L, const GasModel& gas, double cfl, double t0,
                            double t_final, std::span<const double> stops,
                            const std::function<void(const StepInfo&, const Field&)>& on_step,
                            const std::function<double(const Field&)>& extra_limit = nullptr);

/// Rhs operator backed by the production kernel.
RhsOperator kernel_operator(const SchemeSpec& scheme);

}  // namespace dwflow
