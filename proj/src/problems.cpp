#include "dwflow/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dwflow/errors.hpp"

namespace dwflow {

std::string_view to_string(Problem p) noexcept {
  switch (p) {
    case Problem::config2: return "config2";
    case Problem::config3: return "config3";
    case Problem::config4: return "config4";
    case Problem::kh: return "kh";
  }
  return "unknown";
}

Problem parse_problem(std::string_view name) {
  if (name == "config2") return Problem::config2;
  if (name == "config3") return Problem::config3;
  if (name == "config4") return Problem::config4;
  if (name == "kh") return Problem::kh;
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

Boundary problem_boundary(Problem p) noexcept { return p == Problem::kh ? Boundary::periodic : Boundary::free; }

double problem_final_time(Problem p) noexcept {
  switch (p) {
    case Problem::config2: return 0.2;
    case Problem::config3: return 0.8;
    case Problem::config4: return 0.25;
    case Problem::kh: return 2.0;
  }
  return 0.0;
}

RiemannSpec riemann_config(int id) {
  switch (id) {
    case 2:
      return {2,
              {{{1.0, 0.0, 0.0, 1.0},
                {0.5197, -0.7259, 0.0, 0.4},
                {1.0, -0.7259, -0.7259, 1.0},
                {0.5197, 0.0, -0.7259, 0.4}}},
              0.5,
              0.5,
              0.2};
    case 3:
      return {3,
              {{{1.5, 0.0, 0.0, 1.5},
                {0.5323, 1.206, 0.0, 0.3},
                {0.138, 1.206, 1.206, 0.029},
                {0.5323, 0.0, 1.206, 0.3}}},
              0.8,
              0.8,
              0.8};
    case 4:
      return {4,
              {{{1.1, 0.0, 0.0, 1.1},
                {0.5065, 0.8939, 0.0, 0.35},
                {1.1, 0.8939, 0.8939, 1.1},
                {0.5065, 0.0, 0.8939, 0.35}}},
              0.5,
              0.5,
              0.25};
    default:
      throw ConfigError("unknown Riemann configuration " + std::to_string(id));
  }
}

Primitive riemann_state(const RiemannSpec& spec, double x, double y) noexcept {
  const bool east = x >= spec.xc;
  const bool north = y >= spec.yc;
  if (north) return east ? spec.states[0] : spec.states[1];
  return east ? spec.states[3] : spec.states[2];
}

Field init_riemann(int id, const Grid& grid, const GasModel& gas) {
  const RiemannSpec spec = riemann_config(id);
  Field f(grid, Boundary::free);
  for (int k = 0; k < grid.ny; ++k)
    for (int j = 0; j < grid.nx; ++j) f(j, k) = prim_to_cons(riemann_state(spec, grid.xc(j), grid.yc(k)), gas);
  apply_bc(f);
  return f;
}

const KHCoeffs& kh_reference_coeffs() {
  static const KHCoeffs coeffs = [] {
    KHCoeffs c;
    c.a = {{{6.848086824246653e-08, 9.373025805955863e-03},
            {4.450348128947341e-03, 1.976861219341060e-02},
            {6.156955958786613e-02, 1.29928159795144e-01},
            {1.16481555805349e-01, 2.15403817045303e-01},
            {1.68204784555961e-01, 1.758678905771403e-02},
            {1.46413246162863e-01, 2.11994809652299e-01},
            {5.857224323849688e-02, 2.134903127162342e-02},
            {1.59868678328304e-01, 1.48283301108284e-01},
            {1.39003488203723e-01, 1.98161392506709e-01},
            {1.45436027507622e-01, 2.815106156355688e-02}}};
    c.b = {{{-0.973625473853271, 3.10750325239443},
            {2.33221742979395, 1.74829850637860},
            {-2.57661895600041, -3.01803367486339},
            {2.43965931651801, -2.07430785001108},
            {1.26278768686501, 3.10856394704146},
            {1.47373734867445, 1.59399689987015},
            {-1.25553236484458, -1.77202310331374},
            {-2.82920698380582, 1.00086476379714},
            {2.56472949845762, 0.245159802027399},
            {-2.52798558841484, -0.125265541490568}}};
    return c;
  }();
  return coeffs;
}

KHCoeffs load_kh_coeffs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(IoError::Kind::open_failed, "cannot open " + path.string());
  KHCoeffs c;
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    int n = 0;
    double a1, a2, b1, b2;
    if (!(row >> n >> a1 >> a2 >> b1 >> b2) || n != rows + 1 || rows >= 10) {
      throw IoError(IoError::Kind::corrupt_header, "malformed coefficient row in " + path.string());
    }
    c.a[rows] = {a1, a2};
    c.b[rows] = {b1, b2};
    ++rows;
  }
  if (rows != 10) throw IoError(IoError::Kind::length_mismatch, "expected 10 coefficient rows in " + path.string());
  return c;
}

double kh_interface(double x, const KHCoeffs& coeffs, int j) {
  if (j != 1 && j != 2) throw ConfigError("interface index must be 1 or 2");
  double y = 0.0;
  for (int n = 1; n <= 10; ++n) {
    y += coeffs.a[n - 1][j - 1] * std::cos(coeffs.b[n - 1][j - 1] + 2.0 * n * std::numbers::pi * x);
  }
  return y;
}

Field init_kh(const Grid& grid, const KHCoeffs& coeffs, const GasModel& gas) {
  static constexpr std::array<double, 5> nodes{-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                               0.9061798459386640};
  static constexpr std::array<double, 5> weights{0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                                 0.4786286704993665, 0.2369268850561891};
  const Vec4 inner = prim_to_cons(kKhInner, gas).q;
  const Vec4 outer = prim_to_cons(kKhOuter, gas).q;

  Field f(grid, Boundary::periodic);
  std::vector<double> lo(grid.nx * nodes.size()), hi(lo.size());
  for (int j = 0; j < grid.nx; ++j)
    for (std::size_t g = 0; g < nodes.size(); ++g) {
      const double x = grid.xc(j) + 0.5 * grid.dx * nodes[g];
      lo[j * nodes.size() + g] = 0.25 + 0.01 * kh_interface(x, coeffs, 1);
      hi[j * nodes.size() + g] = 0.75 + 0.01 * kh_interface(x, coeffs, 2);
    }

  for (int k = 0; k < grid.ny; ++k) {
    const double y0 = k * grid.dy, y1 = (k + 1) * grid.dy;
    for (int j = 0; j < grid.nx; ++j) {
      double frac = 0.0;
      std::size_t full = 0, empty = 0;
      for (std::size_t g = 0; g < nodes.size(); ++g) {
        const double l = lo[j * nodes.size() + g], h = hi[j * nodes.size() + g];
        if (l <= y0 && h >= y1) ++full;
        if (h <= y0 || l >= y1) ++empty;
        const double len = std::max(0.0, std::min(y1, h) - std::max(y0, l));
        frac += 0.5 * weights[g] * len / grid.dy;
      }
      if (empty == nodes.size()) {
        f(j, k).q = outer;
      } else if (full == nodes.size()) {
        f(j, k).q = inner;
      } else {
        f(j, k).q = frac * inner + (1.0 - frac) * outer;
      }
    }
  }
  apply_bc(f);
  return f;
}

Field init_problem(Problem p, const Grid& grid, const GasModel& gas) {
  switch (p) {
    case Problem::config2: return init_riemann(2, grid, gas);
    case Problem::config3: return init_riemann(3, grid, gas);
    case Problem::config4: return init_riemann(4, grid, gas);
    case Problem::kh: return init_kh(grid, kh_reference_coeffs(), gas);
  }
  throw ConfigError("unknown problem");
}

}  // namespace dwflow
