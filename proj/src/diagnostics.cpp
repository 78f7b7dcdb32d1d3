#include "dwflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "dwflow/errors.hpp"

namespace dwflow {

int order_index(int order) {
  for (std::size_t i = 0; i < kOrders.size(); ++i)
    if (kOrders[i] == order) return static_cast<int>(i) + 1;
  throw ConfigError("unsupported scheme order " + std::to_string(order));
}

double integrate(std::span<const double> values, const Grid& grid) {
  if (values.size() != grid.cells()) throw ConfigError("value count does not match the grid");
  double total = 0.0;
  for (int k = 0; k < grid.ny; ++k) {
    double row = 0.0;
    const double* v = values.data() + static_cast<std::size_t>(k) * grid.nx;
    for (int j = 0; j < grid.nx; ++j) row += v[j];
    total += row;
  }
  return total * (grid.dx * grid.dy);
}

Field interior_copy(const Field& f) {
  Grid g = f.grid();
  g.ghost = 0;
  Field out(g, f.bc());
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) out(j, k) = f(j, k);
  return out;
}

namespace {

bool same_mesh(const Grid& a, const Grid& b) { return a.nx == b.nx && a.ny == b.ny; }

}  // namespace

OrderAverage cesaro_average(std::span<const Field> members, int n, const GasModel& gas) {
  if (n < 1 || n > static_cast<int>(members.size())) {
    throw ConfigError("average over " + std::to_string(n) + " of " + std::to_string(members.size()) + " members");
  }
  OrderAverage avg;
  avg.grid = members[0].grid();
  avg.grid.ghost = 0;
  avg.n = n;
  const std::size_t cells = avg.grid.cells();
  for (auto* v : {&avg.rho, &avg.mx, &avg.my, &avg.S, &avg.E}) v->assign(cells, 0.0);

  for (int l = 0; l < n; ++l) {
    const Field& f = members[l];
    if (!same_mesh(f.grid(), avg.grid)) throw ConfigError("family members live on different grids");
    std::size_t i = 0;
    for (int k = 0; k < avg.grid.ny; ++k)
      for (int j = 0; j < avg.grid.nx; ++j, ++i) {
        const Conserved& U = f(j, k);
        avg.rho[i] += U.rho();
        avg.mx[i] += U.mx();
        avg.my[i] += U.my();
        avg.E[i] += U.E();
        avg.S[i] += entropy_density(U, gas);
      }
  }
  const double inv = 1.0 / n;
  for (auto* v : {&avg.rho, &avg.mx, &avg.my, &avg.S, &avg.E})
    for (double& x : *v) x *= inv;
  return avg;
}

TimeAverage::TimeAverage(const Grid& grid) : grid_(grid), sum_(grid.cells()) { grid_.ghost = 0; }

void TimeAverage::accumulate(const Field& f, double weight) {
  if (!(weight > 0.0)) throw ConfigError("time-average weight must be positive");
  if (!same_mesh(f.grid(), grid_)) throw ConfigError("time average grid mismatch");
  std::size_t i = 0;
  for (int k = 0; k < grid_.ny; ++k)
    for (int j = 0; j < grid_.nx; ++j, ++i) sum_[i] = sum_[i] + weight * f(j, k).q;
  covered_ += weight;
}

Field TimeAverage::finalize(double T) const {
  if (!(T > 0.0)) throw ConfigError("time average over a non-positive interval");
  if (std::abs(covered_ - T) > 1e-10) {
    throw ConfigError("time average covers " + std::to_string(covered_) + " of " + std::to_string(T));
  }
  Field out(grid_, Boundary::free);
  std::size_t i = 0;
  for (int k = 0; k < grid_.ny; ++k)
    for (int j = 0; j < grid_.nx; ++j, ++i) out(j, k).q = (1.0 / T) * sum_[i];
  return out;
}

std::vector<double> subdomain_densities(const Field& f, const Rect& r) {
  const Grid& g = f.grid();
  std::vector<double> out;
  for (int k = 0; k < g.ny; ++k) {
    const double y = g.yc(k);
    if (y < r.y0 || y > r.y1) continue;
    for (int j = 0; j < g.nx; ++j) {
      const double x = g.xc(j);
      if (x >= r.x0 && x <= r.x1) out.push_back(f(j, k).rho());
    }
  }
  return out;
}

bool holds_cell_center(const Grid& g, const Rect& r) {
  bool in_x = false, in_y = false;
  for (int j = 0; j < g.nx && !in_x; ++j) in_x = g.xc(j) >= r.x0 && g.xc(j) <= r.x1;
  for (int k = 0; k < g.ny && !in_y; ++k) in_y = g.yc(k) >= r.y0 && g.yc(k) <= r.y1;
  return in_x && in_y;
}

double YoungPDF::mass() const noexcept {
  if (degenerate) return 1.0;
  double s = 0.0;
  for (double v : sigma) s += v;
  return bin_width * s;
}

YoungPDF young_pdf(std::span<const double> values, double lo, double hi) {
  if (values.empty()) throw ConfigError("histogram of an empty sample");
  if (!(hi >= lo)) throw ConfigError("histogram range is reversed");
  YoungPDF pdf;
  pdf.rho_min = lo;
  pdf.rho_max = hi;
  pdf.samples = values.size();
  if (hi == lo) {
    pdf.degenerate = true;
    return pdf;
  }
  const double range = hi - lo;
  pdf.bin_width = range / kPdfBins;
  std::array<std::size_t, kPdfBins> counts{};
  for (double v : values) {
    int b = static_cast<int>(std::floor((v - lo) / range * kPdfBins));
    counts[std::clamp(b, 0, kPdfBins - 1)] += 1;
  }
  const double scale = kPdfBins / (static_cast<double>(values.size()) * range);
  for (int i = 0; i < kPdfBins; ++i) pdf.sigma[i] = static_cast<double>(counts[i]) * scale;
  return pdf;
}

YoungPDF young_pdf(std::span<const double> values) {
  if (values.empty()) throw ConfigError("histogram of an empty sample");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return young_pdf(values, *lo, *hi);
}

YoungPDF young_pdf(const Field& f, const Rect& r) {
  const std::vector<double> v = subdomain_densities(f, r);
  if (v.empty()) throw ConfigError("no cell center lies in the subdomain");
  return young_pdf(v);
}

YoungPDF pdf_average(std::span<const YoungPDF> pdfs, int n) {
  if (n < 1 || n > static_cast<int>(pdfs.size())) throw ConfigError("PDF average over an invalid count");
  YoungPDF out = pdfs[0];
  for (int l = 1; l < n; ++l) {
    const YoungPDF& p = pdfs[l];
    if (p.rho_min != out.rho_min || p.rho_max != out.rho_max || p.degenerate != out.degenerate) {
      throw ConfigError("PDFs do not share bin edges");
    }
    for (int i = 0; i < kPdfBins; ++i) out.sigma[i] += p.sigma[i];
    out.samples += p.samples;
  }
  for (double& s : out.sigma) s /= n;
  return out;
}

double l1_distance(std::span<const double> f, std::span<const double> g, const Grid& grid) {
  if (f.size() != g.size() || f.size() != grid.cells()) throw ConfigError("L1 distance between mismatched grids");
  std::vector<double> diff(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) diff[i] = std::abs(f[i] - g[i]);
  return integrate(diff, grid);
}

double l1_density_distance(const Field& f, const Field& g) {
  if (!same_mesh(f.grid(), g.grid())) throw ConfigError("L1 distance between mismatched grids");
  return l1_distance(f.interior_component(0), g.interior_component(0), f.grid());
}

PowerLaw powerlaw_fit(std::span<const double> errors) {
  if (errors.size() < 2) throw ConfigError("power-law fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(errors.size());
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] > 0.0)) throw ConfigError("power-law fit of a non-positive error");
    const double x = std::log(static_cast<double>(i + 1));
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double alpha = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double lnC = (sy - alpha * sx) / m;
  return {std::exp(lnC), alpha};
}

double energy_from_entropy(double rho, double mx, double my, double S, const GasModel& gas) {
  if (!(rho > kAdmissibilityFloor)) throw InvalidState("non-positive averaged density");
  const double p = std::pow(rho, gas.gamma) * std::exp(S / (gas.cv() * rho));
  return p * gas.cv() + 0.5 * (mx * mx + my * my) / rho;
}

FunctionalSample functionals(const OrderAverage& avg, const GasModel& gas) {
  const std::size_t cells = avg.grid.cells();
  std::vector<double> e2(cells), gap(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    e2[i] = energy_from_entropy(avg.rho[i], avg.mx[i], avg.my[i], avg.S[i], gas);
    gap[i] = std::abs(avg.E[i] - e2[i]);
  }
  FunctionalSample s;
  s.S = integrate(avg.S, avg.grid);
  s.E1 = integrate(avg.E, avg.grid);
  s.E2 = integrate(e2, avg.grid);
  s.DE = integrate(gap, avg.grid);
  return s;
}

FunctionalSample functionals(std::span<const Field> members, int n, const GasModel& gas) {
  return functionals(cesaro_average(members, n, gas), gas);
}

double min_specific_entropy(const Field& f, const GasModel& gas) {
  const Grid& g = f.grid();
  double lo = std::numeric_limits<double>::infinity();
  for (int k = 0; k < g.ny; ++k)
    for (int j = 0; j < g.nx; ++j) {
      const Conserved& U = f(j, k);
      lo = std::min(lo, entropy_density(U, gas) / U.rho());
    }
  return lo;
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError(IoError::Kind::open_failed, "cannot write " + path.string());
  out.precision(17);
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError(IoError::Kind::write_failed, "write failed for " + path.string());
}

}  // namespace

void write_functional_csv(const std::filesystem::path& path, std::span<const FunctionalSample> series) {
  std::ofstream out = open_csv(path);
  out << "t,S_n,E1_n,E2_n,DE_n\n";
  for (const FunctionalSample& s : series) out << s.t << ',' << s.S << ',' << s.E1 << ',' << s.E2 << ',' << s.DE << '\n';
  finish(out, path);
}

void write_pdf_csv(const std::filesystem::path& path, const YoungPDF& pdf) {
  std::ofstream out = open_csv(path);
  out << "bin_center,sigma\n";
  if (pdf.degenerate) {
    out << pdf.rho_min << ',' << 1.0 << '\n';
  } else {
    for (int i = 0; i < kPdfBins; ++i) out << pdf.center(i) << ',' << pdf.sigma[i] << '\n';
  }
  finish(out, path);
}

void write_error_csv(const std::filesystem::path& path, std::span<const double> errors, const PowerLaw& fit) {
  std::ofstream out = open_csv(path);
  out << "n,l1_error,fit\n";
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    out << i + 1 << ',' << errors[i] << ',' << fit.C * std::pow(n, fit.alpha) << '\n';
  }
  finish(out, path);
}

}  // namespace dwflow
