#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dwflow/euler.hpp"

namespace dwflow {

enum class Boundary { periodic, free };

/// Uniform Cartesian grid on the unit square with `ghost` halo layers.
struct Grid {
  int nx = 0;
  int ny = 0;
  int ghost = 0;
  double dx = 0.0;
  double dy = 0.0;

  static Grid unit_square(int nx, int ny, int ghost);

  double xc(int j) const noexcept { return (j + 0.5) * dx; }
  double yc(int k) const noexcept { return (k + 0.5) * dy; }
  std::size_t cells() const noexcept { return static_cast<std::size_t>(nx) * ny; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Ghost width needed by a scheme of the given order (1, 2, 3, 5, 7, 9).
int halo_width(int order);

/// Conserved states on a grid including ghost layers. Cell (j, k) with
/// 0 <= j < nx, 0 <= k < ny is interior; ghosts extend `ghost` cells out.
class Field {
 public:
  Field() = default;
  Field(const Grid& grid, Boundary bc);

  const Grid& grid() const noexcept { return grid_; }
  Boundary bc() const noexcept { return bc_; }

  Conserved& operator()(int j, int k) noexcept { return data_[index(j, k)]; }
  const Conserved& operator()(int j, int k) const noexcept { return data_[index(j, k)]; }

  /// Distance between vertically adjacent cells in `raw()`.
  std::ptrdiff_t stride() const noexcept { return grid_.nx + 2 * grid_.ghost; }
  std::size_t index(int j, int k) const noexcept {
    return static_cast<std::size_t>((k + grid_.ghost) * stride() + (j + grid_.ghost));
  }

  std::span<Conserved> raw() noexcept { return data_; }
  std::span<const Conserved> raw() const noexcept { return data_; }

  /// Copies the interior into a dense row-major (k outer) array.
  std::vector<Conserved> interior() const;
  std::vector<double> interior_component(int c) const;

  /// Interior sum of each conserved component times dx*dy.
  Vec4 integral() const;

 private:
  Grid grid_{};
  Boundary bc_ = Boundary::free;
  std::vector<Conserved> data_;
};

/// Fills every ghost cell from the interior according to the field's
/// boundary kind. Periodic ghosts wrap; free ghosts copy the nearest interior
/// cell, x sweep first, then y sweep over the full width (corners included).
void apply_bc(Field& f);

}  // namespace dwflow
