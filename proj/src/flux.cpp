#include "dwflow/flux.hpp"

#include <algorithm>
#include <cctype>

#include "dwflow/errors.hpp"

namespace dwflow {

std::string_view to_string(FluxFamily family) noexcept {
  switch (family) {
    case FluxFamily::lcdcu: return "lcdcu";
    case FluxFamily::ldcu: return "ldcu";
    case FluxFamily::vfv: return "vfv";
  }
  return "unknown";
}

FluxFamily parse_flux_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "lcdcu") return FluxFamily::lcdcu;
  if (lower == "ldcu") return FluxFamily::ldcu;
  if (lower == "vfv") return FluxFamily::vfv;
  throw ConfigError("unknown flux family '" + std::string(name) + "'");
}

namespace {

void require_admissible(const Conserved& Um, const Conserved& Up, const GasModel& gas) {
  if (!is_admissible(Um, gas)) throw InvalidState("inadmissible left interface state");
  if (!is_admissible(Up, gas)) throw InvalidState("inadmissible right interface state");
}

int normal_index(Axis axis) { return axis == Axis::x ? 1 : 2; }

}  // namespace

Vec4 vfv_upwind(const Conserved& Um, const Conserved& Up, Axis axis, const GasModel& gas) {
  require_admissible(Um, Up, gas);
  return detail::vfv_upwind_along(Um.q, Up.q, normal_index(axis));
}

Vec4 vfv_flux(const Conserved& Um, const Conserved& Up, Axis axis, const GasModel& gas) {
  require_admissible(Um, Up, gas);
  return detail::vfv_flux_along(Um.q, Up.q, normal_index(axis), gas.gamma);
}

Vec4 cu_flux(const Conserved& Um, const Conserved& Up, Axis axis, const GasModel& gas) {
  require_admissible(Um, Up, gas);
  return detail::cu_flux_along(Um.q, Up.q, normal_index(axis), gas.gamma);
}

Vec4 numerical_flux(FluxFamily family, const Conserved& Um, const Conserved& Up, Axis axis,
                    const GasModel& gas) {
  return family == FluxFamily::vfv ? vfv_flux(Um, Up, axis, gas) : cu_flux(Um, Up, axis, gas);
}

std::vector<double> vfv_first_order_energy_rhs(const Field& f, const GasModel& gas) {
  const Grid& g = f.grid();
  if (g.ghost < 1) throw ConfigError("first-order VFV energy needs one ghost layer");

  auto prim = [&](int j, int k) { return cons_to_prim(f(j, k), gas); };
  auto kinetic = [](const Primitive& w) { return w.u * w.u + w.v * w.v; };

  std::vector<double> out;
  out.reserve(g.cells());
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) {
      const Primitive c = prim(j, k);
      const Primitive w = prim(j - 1, k), e = prim(j + 1, k);
      const Primitive s = prim(j, k - 1), n = prim(j, k + 1);

      const double fe = vfv_upwind(f(j, k), f(j + 1, k), Axis::x, gas)[3];
      const double fw = vfv_upwind(f(j - 1, k), f(j, k), Axis::x, gas)[3];
      const double gn = vfv_upwind(f(j, k), f(j, k + 1), Axis::y, gas)[3];
      const double gs = vfv_upwind(f(j, k - 1), f(j, k), Axis::y, gas)[3];

      double r = -(fe - fw) / g.dx - (gn - gs) / g.dy;
      r -= c.u * (e.p - w.p) / (2.0 * g.dx) + c.p * (e.u - w.u) / (2.0 * g.dx);
      r -= c.v * (n.p - s.p) / (2.0 * g.dy) + c.p * (n.v - s.v) / (2.0 * g.dy);
      r += (kinetic(e) - 2.0 * kinetic(c) + kinetic(w)) / (2.0 * g.dx);
      r += (kinetic(n) - 2.0 * kinetic(c) + kinetic(s)) / (2.0 * g.dy);
      out.push_back(r);
    }
  return out;
}

}  // namespace dwflow
