#pragma once

// Cross-order (Cesaro) averages, time averages, density histograms,
// K-convergence errors and the entropy/energy functionals.

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "dwflow/euler.hpp"
#include "dwflow/grid.hpp"

namespace dwflow {

/// Scheme orders in family order.
inline constexpr std::array<int, 6> kOrders{1, 2, 3, 5, 7, 9};

/// Family index l(r): 1, 2, 3, 4, 5, 6 for r = 1, 2, 3, 5, 7, 9.
int order_index(int order);

/// dx*dy times the interior sum, rows summed first and then added in order.
double integrate(std::span<const double> values, const Grid& grid);

/// Copy of the interior without ghost layers.
Field interior_copy(const Field& f);

/// Component-wise averages over the first n members of a family.
struct OrderAverage {
  Grid grid{};
  int n = 0;
  std::vector<double> rho, mx, my, S, E;  // interior, row-major
};

/// Throws ConfigError for n outside 1..members.size() or mismatched grids.
OrderAverage cesaro_average(std::span<const Field> members, int n, const GasModel& gas);

/// Running time integral of a field; finalize divides by the covered time.
class TimeAverage {
 public:
  explicit TimeAverage(const Grid& grid);

  /// Adds weight * f. Throws ConfigError unless weight > 0 and grids match.
  void accumulate(const Field& f, double weight);
  double covered() const noexcept { return covered_; }

  /// Returns the accumulated integral / T (ghost width 0). Throws ConfigError
  /// if T <= 0 or if the accumulated weights differ from T by more than 1e-10.
  Field finalize(double T) const;

 private:
  Grid grid_;
  std::vector<Vec4> sum_;
  double covered_ = 0.0;
};

struct Rect {
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
};

/// Interior densities of the cells whose centers lie in the closed rectangle.
std::vector<double> subdomain_densities(const Field& f, const Rect& r);

/// True when at least one cell center of the grid lies in the rectangle.
bool holds_cell_center(const Grid& g, const Rect& r);

inline constexpr int kPdfBins = 30;

struct YoungPDF {
  double rho_min = 0.0;
  double rho_max = 0.0;
  double bin_width = 0.0;
  std::array<double, kPdfBins> sigma{};
  bool degenerate = false;  // rho_max == rho_min: a unit spike at rho_min
  std::size_t samples = 0;

  /// bin_width * sum(sigma), or 1 for the degenerate spike.
  double mass() const noexcept;
  double center(int i) const noexcept { return rho_min + (i + 0.5) * bin_width; }
};

/// Histogram on [lo, hi] (values outside are clamped into the end bins).
/// Throws ConfigError for an empty sample or hi < lo.
YoungPDF young_pdf(std::span<const double> values, double lo, double hi);

/// Histogram on the sample's own range.
YoungPDF young_pdf(std::span<const double> values);

/// Histogram of the subdomain densities. Throws ConfigError if no cell
/// center lies inside.
YoungPDF young_pdf(const Field& f, const Rect& r);

/// Mean of the first n histograms. Throws ConfigError unless they share edges.
YoungPDF pdf_average(std::span<const YoungPDF> pdfs, int n);

/// dx*dy * sum |f - g|. Throws ConfigError on size mismatch.
double l1_distance(std::span<const double> f, std::span<const double> g, const Grid& grid);
double l1_density_distance(const Field& f, const Field& g);

struct PowerLaw {
  double C = 0.0;
  double alpha = 0.0;
};

/// Least squares fit of ln e_n = ln C + alpha ln n for n = 1..size.
/// Throws ConfigError on non-positive errors or fewer than two points.
PowerLaw powerlaw_fit(std::span<const double> errors);

struct FunctionalSample {
  double t = 0.0;
  double S = 0.0;   // integral of the averaged entropy
  double E1 = 0.0;  // integral of the averaged energy
  double E2 = 0.0;  // integral of the energy of the averaged state
  double DE = 0.0;  // integral of |averaged energy - energy of averaged state|
};

/// Energy of the state (rho, m, S) of a polytropic gas.
double energy_from_entropy(double rho, double mx, double my, double S, const GasModel& gas);

FunctionalSample functionals(const OrderAverage& avg, const GasModel& gas);
FunctionalSample functionals(std::span<const Field> members, int n, const GasModel& gas);

/// min over interior cells of cv ln(p / rho^gamma).
double min_specific_entropy(const Field& f, const GasModel& gas);

/// CSV writers. Throw IoError on failure.
void write_functional_csv(const std::filesystem::path& path, std::span<const FunctionalSample> series);
void write_pdf_csv(const std::filesystem::path& path, const YoungPDF& pdf);
void write_error_csv(const std::filesystem::path& path, std::span<const double> errors, const PowerLaw& fit);

}  // namespace dwflow
