#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <random>

#include "dwflow/euler.hpp"
#include "dwflow/grid.hpp"

namespace dwflow::test {

inline Conserved cons(double rho, double u, double v, double p, const GasModel& gas = {}) {
  return prim_to_cons(Primitive{rho, u, v, p}, gas);
}

// Random admissible state with O(1) magnitudes and Mach numbers up to ~3.
inline Conserved random_state(std::mt19937_64& rng, const GasModel& gas = {}) {
  std::uniform_real_distribution<double> pos(0.1, 3.0), vel(-2.0, 2.0);
  return cons(pos(rng), vel(rng), vel(rng), pos(rng), gas);
}

// Distance in units in the last place, for finite doubles.
inline std::int64_t ulps(double a, double b) {
  if (a == b) return 0;
  auto key = [](double x) {
    std::int64_t i;
    std::memcpy(&i, &x, sizeof i);
    return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
  };
  const std::int64_t d = key(a) - key(b);
  return d < 0 ? -d : d;
}

// Fills the interior of a field from a primitive-valued function of the cell
// center and refreshes the ghosts.
template <class Fn>
Field field_from(const Grid& g, Boundary bc, Fn&& prim, const GasModel& gas = {}) {
  Field f(g, bc);
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) f(j, k) = prim_to_cons(prim(g.xc(j), g.yc(k)), gas);
  apply_bc(f);
  return f;
}

}  // namespace dwflow::test
