#include "dwflow/euler.hpp"

#include <sstream>

#include "dwflow/errors.hpp"

namespace dwflow {

InvalidState::InvalidState(const std::string& what, std::optional<CellIndex> cell)
    : Error(what), cell_(cell) {}

BlowUp::BlowUp(double time, int stage, CellIndex worst, double worst_density, double worst_pressure)
    : Error([&] {
        std::ostringstream os;
        os << "blow-up at t=" << time << " in RK stage " << stage << ", cell (" << worst.j << ", "
           << worst.k << "): rho=" << worst_density << " p=" << worst_pressure;
        return os.str();
      }()),
      time_(time),
      stage_(stage),
      worst_(worst),
      rho_(worst_density),
      p_(worst_pressure) {}

GasModel GasModel::with_gamma(double gamma) {
  if (!(gamma > 1.0)) throw ConfigError("gamma must exceed 1");
  return GasModel{gamma};
}

bool is_admissible(const Conserved& U, const GasModel& gas) noexcept {
  if (!(U.rho() > kAdmissibilityFloor)) return false;
  return detail::pressure(U.q, gas.gamma) > kAdmissibilityFloor;
}

Primitive cons_to_prim(const Conserved& U, const GasModel& gas) {
  if (!(U.rho() > kAdmissibilityFloor)) {
    throw InvalidState("non-positive density " + std::to_string(U.rho()));
  }
  const double p = detail::pressure(U.q, gas.gamma);
  if (!(p > kAdmissibilityFloor)) throw InvalidState("non-positive pressure " + std::to_string(p));
  return {U.rho(), U.mx() / U.rho(), U.my() / U.rho(), p};
}

Conserved prim_to_cons(const Primitive& W, const GasModel& gas) {
  if (!(W.rho > kAdmissibilityFloor) || !(W.p > kAdmissibilityFloor)) {
    throw InvalidState("primitive state needs positive density and pressure");
  }
  const double kinetic = 0.5 * W.rho * (W.u * W.u + W.v * W.v);
  return Conserved{{W.rho, W.rho * W.u, W.rho * W.v, W.p * gas.cv() + kinetic}};
}

Vec4 phys_flux(const Conserved& U, Axis axis, const GasModel& gas) {
  const Primitive W = cons_to_prim(U, gas);
  const double un = axis == Axis::x ? W.u : W.v;
  Vec4 f{U.rho() * un, U.mx() * un, U.my() * un, un * (U.E() + W.p)};
  f[axis == Axis::x ? 1 : 2] += W.p;
  return f;
}

double entropy_density(const Conserved& U, const GasModel& gas) {
  const Primitive W = cons_to_prim(U, gas);
  return gas.cv() * W.rho * std::log(W.p / std::pow(W.rho, gas.gamma));
}

WaveSpeeds max_wave_speeds(const Conserved& U, const GasModel& gas) {
  const Primitive W = cons_to_prim(U, gas);
  const double c = std::sqrt(gas.gamma * W.p / W.rho);
  return {std::abs(W.u) + c, std::abs(W.v) + c};
}

}  // namespace dwflow
