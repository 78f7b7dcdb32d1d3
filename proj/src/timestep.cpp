#include "dwflow/timestep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dwflow/errors.hpp"

namespace dwflow {

double default_cfl(FluxFamily family) noexcept { return family == FluxFamily::vfv ? 0.1 : 0.45; }

double compute_dt(const Field& f, double cfl, const GasModel& gas, double t, double t_final) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("CFL number must lie in (0, 1]");
  const Grid& g = f.grid();
  double limit = std::numeric_limits<double>::infinity();
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) {
      if (!is_admissible(f(j, k), gas)) throw InvalidState("inadmissible state in time step", CellIndex{j, k});
      const WaveSpeeds a = max_wave_speeds(f(j, k), gas);
      limit = std::min({limit, g.dx / a.ax, g.dy / a.ay});
    }
  return std::min(cfl * limit, t_final - t);
}

double vfv_viscous_dt(const Field& f) {
  const Grid& g = f.grid();
  double rho = std::numeric_limits<double>::infinity();
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) rho = std::min(rho, f(j, k).rho());
  return rho / (2.0 * (1.0 / g.dx + 1.0 / g.dy));
}

namespace {

void check_stage(const Field& U, const GasModel& gas, double t, int stage) {
  const Grid& g = U.grid();
  bool ok = true;
  CellIndex worst{0, 0};
  double worst_score = std::numeric_limits<double>::infinity();
  double worst_rho = 0.0, worst_p = 0.0;
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) {
      const Vec4& q = U(j, k).q;
      const double rho = q[0];
      const double p = detail::pressure(q, gas.gamma);
      double score = std::min(rho, p);
      if (std::isnan(score)) score = -std::numeric_limits<double>::infinity();
      if (!is_admissible(U(j, k), gas)) ok = false;
      if (score < worst_score) {
        worst_score = score;
        worst = {j, k};
        worst_rho = rho;
        worst_p = p;
      }
    }
  if (!ok) throw BlowUp(t, stage, worst, worst_rho, worst_p);
}

}  // namespace

void ssprk3_step(Field& U, const RhsOperator& L, double dt, double t, const GasModel& gas) {
  const Grid& g = U.grid();
  const std::size_t n = g.cells();
  const std::vector<Conserved> u0 = U.interior();

  auto for_interior = [&](auto&& fn) {
    std::size_t i = 0;
    for (int k = 0; k < g.ny; ++k)
      for (int j = 0; j < g.nx; ++j, ++i) fn(U(j, k).q, i);
  };

  apply_bc(U);
  Tendency r = L(U);
  if (r.size() != n) throw ConfigError("rhs operator returned the wrong number of cells");
  for_interior([&](Vec4& q, std::size_t i) { q = u0[i].q + dt * r[i]; });
  check_stage(U, gas, t + dt, 1);

  apply_bc(U);
  r = L(U);
  for_interior([&](Vec4& q, std::size_t i) { q = 0.75 * u0[i].q + 0.25 * (q + dt * r[i]); });
  check_stage(U, gas, t + 0.5 * dt, 2);

  apply_bc(U);
  r = L(U);
  for_interior([&](Vec4& q, std::size_t i) { q = (1.0 / 3.0) * u0[i].q + (2.0 / 3.0) * (q + dt * r[i]); });
  check_stage(U, gas, t + dt, 3);
  apply_bc(U);
}

IntegrationResult integrate(Field& U, const RhsOperator& L, const GasModel& gas, double cfl, double t0,
                            double t_final, std::span<const double> stops,
                            const std::function<void(const StepInfo&, const Field&)>& on_step,
                            const std::function<double(const Field&)>& extra_limit) {
  if (!(t_final >= t0)) throw ConfigError("final time precedes the start time");
  IntegrationResult res{t0, 0};
  std::size_t next_stop = 0;
  while (next_stop < stops.size() && stops[next_stop] <= t0) ++next_stop;

  while (res.t < t_final) {
    double target = t_final;
    if (next_stop < stops.size()) target = std::min(target, stops[next_stop]);
    double dt = compute_dt(U, cfl, gas, res.t, target);
    if (extra_limit) dt = std::min(dt, extra_limit(U));
    bool lands = dt >= target - res.t;
    if (lands) dt = target - res.t;
    if (!(dt > 0.0)) throw InvalidState("non-positive time step");

    ssprk3_step(U, L, dt, res.t, gas);
    res.t = lands ? target : res.t + dt;
    ++res.steps;
    while (next_stop < stops.size() && stops[next_stop] <= res.t) ++next_stop;
    if (on_step) on_step(StepInfo{res.steps, res.t, dt}, U);
  }
  return res;
}

RhsOperator kernel_operator(const SchemeSpec& scheme) {
  validate(scheme);
  return [scheme](const Field& f) { return rhs(f, scheme); };
}

}  // namespace dwflow
