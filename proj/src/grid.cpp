#include "dwflow/grid.hpp"

#include "dwflow/errors.hpp"

namespace dwflow {

Grid Grid::unit_square(int nx, int ny, int ghost) {
  if (nx < 1 || ny < 1) throw ConfigError("grid needs at least one cell per direction");
  if (ghost < 0) throw ConfigError("negative ghost width");
  return Grid{nx, ny, ghost, 1.0 / nx, 1.0 / ny};
}

int halo_width(int order) {
  switch (order) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 5;
    case 5: return 7;
    case 7: return 9;
    case 9: return 10;
    default: throw ConfigError("unsupported scheme order " + std::to_string(order));
  }
}

Field::Field(const Grid& grid, Boundary bc)
    : grid_(grid),
      bc_(bc),
      data_(static_cast<std::size_t>(grid.nx + 2 * grid.ghost) * (grid.ny + 2 * grid.ghost)) {}

std::vector<Conserved> Field::interior() const {
  std::vector<Conserved> out;
  out.reserve(grid_.cells());
  for (int k = 0; k < grid_.ny; ++k)
    for (int j = 0; j < grid_.nx; ++j) out.push_back((*this)(j, k));
  return out;
}

std::vector<double> Field::interior_component(int c) const {
  std::vector<double> out;
  out.reserve(grid_.cells());
  for (int k = 0; k < grid_.ny; ++k)
    for (int j = 0; j < grid_.nx; ++j) out.push_back((*this)(j, k)[c]);
  return out;
}

Vec4 Field::integral() const {
  // Row sums first, then rows in order: the result does not depend on threading.
  Vec4 total{};
  for (int k = 0; k < grid_.ny; ++k) {
    Vec4 row{};
    for (int j = 0; j < grid_.nx; ++j) row = row + (*this)(j, k).q;
    total = total + row;
  }
  return (grid_.dx * grid_.dy) * total;
}

namespace {

int wrap(int i, int n) {
  const int m = i % n;
  return m < 0 ? m + n : m;
}

}  // namespace

void apply_bc(Field& f) {
  const Grid& g = f.grid();
  const int G = g.ghost;
  if (G == 0) return;

  if (f.bc() == Boundary::periodic) {
    for (int k = 0; k < g.ny; ++k)
      for (int s = 1; s <= G; ++s) {
        f(-s, k) = f(wrap(-s, g.nx), k);
        f(g.nx - 1 + s, k) = f(wrap(g.nx - 1 + s, g.nx), k);
      }
    for (int s = 1; s <= G; ++s)
      for (int j = -G; j < g.nx + G; ++j) {
        f(j, -s) = f(j, wrap(-s, g.ny));
        f(j, g.ny - 1 + s) = f(j, wrap(g.ny - 1 + s, g.ny));
      }
    return;
  }

  for (int k = 0; k < g.ny; ++k)
    for (int s = 1; s <= G; ++s) {
      f(-s, k) = f(0, k);
      f(g.nx - 1 + s, k) = f(g.nx - 1, k);
    }
  for (int s = 1; s <= G; ++s)
    for (int j = -G; j < g.nx + G; ++j) {
      f(j, -s) = f(j, 0);
      f(j, g.ny - 1 + s) = f(j, g.ny - 1);
    }
}

}  // namespace dwflow
