#include <string>
#include <utility>

#include "dwflow/errors.hpp"
#include "dwflow/rhs.hpp"
#include "dwflow/weno_table.hpp"

namespace dwflow {

namespace {

// Every line is processed in an x-oriented frame: for y sweeps the two
// momentum components are swapped on the way in and on the way out.
struct LineScheme {
  FluxFamily family;
  int order;
  int reach;
  int ghost;
  double gamma;
  double theta;
  bool vfv_first_order;
  std::span<const double> weights;  // folded correction, empty for FV
};

struct LineWork {
  std::vector<Vec4> cells;  // n + 2*ghost, cell c at cells[ghost + c]
  std::vector<Vec4> um, up, flux;
  std::vector<Vec4> out;

  LineWork(int n, const LineScheme& s) {
    cells.resize(static_cast<std::size_t>(n + 2 * s.ghost));
    const std::size_t faces = static_cast<std::size_t>(n + 1 + 2 * s.reach);
    um.resize(faces);
    up.resize(faces);
    flux.resize(faces);
    out.resize(static_cast<std::size_t>(n));
  }
};

inline bool admissible(const Vec4& q, double gamma) noexcept {
  return q[0] > kAdmissibilityFloor && detail::pressure(q, gamma) > kAdmissibilityFloor;
}

inline Vec4 swap_momenta(const Vec4& q) noexcept { return {q[0], q[2], q[1], q[3]}; }

// Interfaces i = first .. first + count - 1, interface i between cells i and i+1.
template <int K>
void weno_faces(const Vec4* c, int first, int count, double gamma, Vec4* um, Vec4* up) {
  constexpr int order = 2 * K - 1;
  constexpr int half = K - 1;
  const weno::Table& t = weno::table(order);
  CharBasis b;
  Vec4 w[order + 1];
  double s[order];
  for (int f = 0; f < count; ++f) {
    const int i = first + f;
    detail::fill_char_basis(0.5 * (c[i] + c[i + 1]), 1, gamma, b);
    for (int m = 0; m <= order; ++m) w[m] = b.project(c[i - half + m]);
    Vec4 wm{}, wp{};
    for (int a = 0; a < 4; ++a) {
      for (int m = 0; m < order; ++m) s[m] = w[m][a];
      wm[a] = weno::interpolate_right<K>(s, t);
      for (int m = 0; m < order; ++m) s[m] = w[order - m][a];
      wp[a] = weno::interpolate_right<K>(s, t);
    }
    um[f] = b.lift(wm);
    up[f] = b.lift(wp);
  }
}

void minmod_faces(const Vec4* c, int first, int count, double theta, Vec4* um, Vec4* up) {
  for (int f = 0; f < count; ++f) {
    const int i = first + f;
    for (int a = 0; a < 4; ++a) {
      um[f][a] = c[i][a] + 0.5 * limited_difference(c[i - 1][a], c[i][a], c[i + 1][a], theta);
      up[f][a] = c[i + 1][a] - 0.5 * limited_difference(c[i][a], c[i + 1][a], c[i + 2][a], theta);
    }
  }
}

void characteristic_minmod_faces(const Vec4* c, int first, int count, double gamma, double theta, Vec4* um,
                                 Vec4* up) {
  CharBasis b;
  for (int f = 0; f < count; ++f) {
    const int i = first + f;
    detail::fill_char_basis(0.5 * (c[i] + c[i + 1]), 1, gamma, b);
    const Vec4 wa = b.project(c[i - 1]), wb = b.project(c[i]);
    const Vec4 wc = b.project(c[i + 1]), wd = b.project(c[i + 2]);
    Vec4 wm{}, wp{};
    for (int a = 0; a < 4; ++a) {
      wm[a] = wb[a] + 0.5 * limited_difference(wa[a], wb[a], wc[a], theta);
      wp[a] = wc[a] - 0.5 * limited_difference(wb[a], wc[a], wd[a], theta);
    }
    um[f] = b.lift(wm);
    up[f] = b.lift(wp);
  }
}

// Fills w.out with -(F_{j+1/2} - F_{j-1/2}) / h for the n cells of the line.
void sweep_line(int n, double h, const LineScheme& s, LineWork& w) {
  const Vec4* c = w.cells.data() + s.ghost;
  const int first = -1 - s.reach;
  const int count = n + 1 + 2 * s.reach;
  Vec4* um = w.um.data();
  Vec4* up = w.up.data();

  switch (s.order) {
    case 1:
      for (int f = 0; f < count; ++f) {
        um[f] = c[first + f];
        up[f] = c[first + f + 1];
      }
      break;
    case 2:
      if (s.family == FluxFamily::lcdcu) {
        characteristic_minmod_faces(c, first, count, s.gamma, s.theta, um, up);
      } else {
        minmod_faces(c, first, count, s.theta, um, up);
      }
      break;
    case 3: weno_faces<2>(c, first, count, s.gamma, um, up); break;
    case 5: weno_faces<3>(c, first, count, s.gamma, um, up); break;
    case 7: weno_faces<4>(c, first, count, s.gamma, um, up); break;
    default: weno_faces<5>(c, first, count, s.gamma, um, up); break;
  }

  for (int f = 0; f < count; ++f) {
    const int i = first + f;
    if (!admissible(um[f], s.gamma)) um[f] = c[i];
    if (!admissible(up[f], s.gamma)) up[f] = c[i + 1];
    w.flux[f] = s.family == FluxFamily::vfv ? detail::vfv_flux_along(um[f], up[f], 1, s.gamma)
                                           : detail::cu_flux_along(um[f], up[f], 1, s.gamma);
    if (s.vfv_first_order) w.flux[f][3] = detail::vfv_upwind_along(um[f], up[f], 1)[3];
  }

  // Corrected fluxes overwrite the front of w.flux: entry f is interface f-1.
  if (s.reach > 0) {
    const int width = 2 * s.reach + 1;
    for (int f = 0; f <= n; ++f) {
      Vec4 acc{};
      for (int m = 0; m < width; ++m) {
        const Vec4& g = w.flux[f + m];
        for (int a = 0; a < 4; ++a) acc[a] += s.weights[m] * g[a];
      }
      w.um[f] = acc;  // reuse as scratch; um is no longer needed
    }
    for (int f = 0; f <= n; ++f) w.flux[f] = w.um[f];
  }

  for (int j = 0; j < n; ++j) {
    const Vec4& fr = w.flux[j + 1];
    const Vec4& fl = w.flux[j];
    for (int a = 0; a < 4; ++a) w.out[j][a] = -(fr[a] - fl[a]) / h;
  }

  if (s.vfv_first_order) {
    auto velocity = [](const Vec4& q) { return q[1] / q[0]; };
    auto kinetic = [](const Vec4& q) { return (q[1] * q[1] + q[2] * q[2]) / (q[0] * q[0]); };
    for (int j = 0; j < n; ++j) {
      const Vec4 &l = c[j - 1], &m = c[j], &r = c[j + 1];
      const double pl = detail::pressure(l, s.gamma), pm = detail::pressure(m, s.gamma);
      const double pr = detail::pressure(r, s.gamma);
      const double um_ = velocity(m);
      double e = w.out[j][3];
      e -= um_ * (pr - pl) / (2.0 * h) + pm * (velocity(r) - velocity(l)) / (2.0 * h);
      e += (kinetic(r) - 2.0 * kinetic(m) + kinetic(l)) / (2.0 * h);
      w.out[j][3] = e;
    }
  }
}

}  // namespace

Tendency rhs(const Field& f, const SchemeSpec& scheme) {
  validate(scheme);
  const Grid& g = f.grid();
  const int halo = halo_width(scheme.order);
  if (g.ghost < halo) {
    throw ConfigError("ghost width " + std::to_string(g.ghost) + " is below the halo of order " +
                      std::to_string(scheme.order));
  }

  LineScheme s{scheme.family,
               scheme.order,
               correction_reach(scheme.order),
               halo,
               scheme.gas.gamma,
               scheme.theta,
               scheme.family == FluxFamily::vfv && scheme.order == 1,
               {}};
  if (s.reach > 0) s.weights = correction_weights(scheme.order);

  Tendency out(g.cells());
  const int G = halo;

#pragma omp parallel
  {
    LineWork wx(g.nx, s);
    LineWork wy(g.ny, s);

#pragma omp for schedule(static)
    for (int k = 0; k < g.ny; ++k) {
      for (int j = -G; j < g.nx + G; ++j) wx.cells[j + G] = f(j, k).q;
      sweep_line(g.nx, g.dx, s, wx);
      Vec4* row = out.data() + static_cast<std::size_t>(k) * g.nx;
      for (int j = 0; j < g.nx; ++j) row[j] = wx.out[j];
    }

#pragma omp for schedule(static)
    for (int j = 0; j < g.nx; ++j) {
      for (int k = -G; k < g.ny + G; ++k) wy.cells[k + G] = swap_momenta(f(j, k).q);
      sweep_line(g.ny, g.dy, s, wy);
      for (int k = 0; k < g.ny; ++k) {
        Vec4& r = out[static_cast<std::size_t>(k) * g.nx + j];
        const Vec4 d = swap_momenta(wy.out[k]);
        for (int a = 0; a < 4; ++a) r[a] += d[a];
      }
    }
  }
  return out;
}

}  // namespace dwflow
