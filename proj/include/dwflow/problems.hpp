#pragma once

// Benchmark initial data: 2-D Riemann Configurations 2, 3, 4 and the
// Kelvin-Helmholtz shear layer.

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "dwflow/euler.hpp"
#include "dwflow/grid.hpp"

namespace dwflow {

enum class Problem { config2, config3, config4, kh };

std::string_view to_string(Problem p) noexcept;
/// Accepts "config2", "config3", "config4", "kh"; throws ConfigError otherwise.
Problem parse_problem(std::string_view name);

Boundary problem_boundary(Problem p) noexcept;
double problem_final_time(Problem p) noexcept;

struct RiemannSpec {
  int id = 2;
  // Quadrants: NE (x >= xc, y >= yc), NW, SW, SE.
  std::array<Primitive, 4> states{};
  double xc = 0.5;
  double yc = 0.5;
  double t_final = 0.0;
};

/// Configuration 2, 3 or 4; throws ConfigError for any other id.
RiemannSpec riemann_config(int id);

/// State of the quadrant containing (x, y); ties go to x >= xc, y >= yc.
Primitive riemann_state(const RiemannSpec& spec, double x, double y) noexcept;

/// Cell-center sampled Riemann data with free boundaries (ghosts filled).
Field init_riemann(int id, const Grid& grid, const GasModel& gas = {});

struct KHCoeffs {
  std::array<std::array<double, 2>, 10> a{};  // a[n-1][j-1]
  std::array<std::array<double, 2>, 10> b{};
};

/// The built-in shear-layer perturbation table.
const KHCoeffs& kh_reference_coeffs();

/// Reads the 10-row text table (columns n a1 a2 b1 b2, '#' comments).
/// Throws IoError if the file cannot be read or is malformed.
KHCoeffs load_kh_coeffs(const std::filesystem::path& path);

/// Y_j(x) = sum_n a[n][j] cos(b[n][j] + 2 n pi x), j in {1, 2}.
double kh_interface(double x, const KHCoeffs& coeffs, int j);

inline constexpr Primitive kKhInner{2.0, -0.5, 0.0, 2.5};
inline constexpr Primitive kKhOuter{1.0, 0.5, 0.0, 2.5};

/// Shear-layer data with periodic boundaries (ghosts filled). Each cell holds
/// the exact average of the conserved variables: the strip is clipped
/// exactly in y and integrated with 5-point Gauss-Legendre in x, so cells
/// away from the perturbed interfaces take one of the two states exactly.
Field init_kh(const Grid& grid, const KHCoeffs& coeffs = kh_reference_coeffs(), const GasModel& gas = {});

/// Dispatch on the problem kind.
Field init_problem(Problem p, const Grid& grid, const GasModel& gas = {});

}  // namespace dwflow
