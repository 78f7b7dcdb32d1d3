#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dwflow/errors.hpp"
#include "dwflow/flux.hpp"
#include "support.hpp"

using namespace dwflow;
using dwflow::test::cons;

TEST(FluxFamily, Parse) {
  EXPECT_EQ(parse_flux_family("LCDCU"), FluxFamily::lcdcu);
  EXPECT_EQ(parse_flux_family("ldcu"), FluxFamily::ldcu);
  EXPECT_EQ(parse_flux_family("Vfv"), FluxFamily::vfv);
  EXPECT_EQ(to_string(FluxFamily::vfv), "vfv");
  EXPECT_THROW(parse_flux_family("hllc"), ConfigError);
}

TEST(VfvUpwind, Examples) {
  const GasModel gas{};
  const Conserved U = cons(1, 1, 0, 1);
  const Vec4 F1 = vfv_upwind(U, U, Axis::x, gas);
  const Vec4 want{1, 1, 0, 3};
  for (int c = 0; c < 4; ++c) EXPECT_DOUBLE_EQ(F1[c], want[c]);

  const Conserved S = cons(1.3, 0, 0, 0.7);
  EXPECT_EQ(vfv_upwind(S, S, Axis::x, gas), (Vec4{0, 0, 0, 0}));

  // u- + u+ = 0 leaves the unit jump term only.
  const Conserved a = cons(1.2, 0.4, -0.3, 1.1), b = cons(0.7, -0.4, 0.9, 2.0);
  const Vec4 F = vfv_upwind(a, b, Axis::x, gas);
  for (int c = 0; c < 4; ++c) EXPECT_DOUBLE_EQ(F[c], -(b[c] - a[c]));
  EXPECT_EQ(F[0], -(b.rho() - a.rho()));

  EXPECT_THROW(vfv_upwind(Conserved{{-1, 0, 0, 1}}, U, Axis::x, gas), InvalidState);
}

TEST(VfvFlux, Examples) {
  const GasModel gas{};
  const Conserved U = cons(1, 1, 0, 1);
  EXPECT_EQ(vfv_flux_x(U, U, gas), (Vec4{1, 2, 0, 4}));
  const Conserved S = cons(1, 0, 0, 1);
  EXPECT_EQ(vfv_flux_x(S, S, gas), (Vec4{0, 1, 0, 0}));

  const Vec4 F = vfv_flux_x(cons(1, 0, 0, 1), cons(0.5, 0, 0, 1), gas);
  EXPECT_DOUBLE_EQ(F[0], 0.5);
  EXPECT_DOUBLE_EQ(F[1], 1.0);
  EXPECT_THROW(vfv_flux_y(U, Conserved{{1, 0, 0, 0}}, gas), InvalidState);
}

TEST(VfvFlux, HandAssembledJumpTerms) {
  // Independent evaluation of every term for one asymmetric pair.
  const GasModel gas{};
  const double rm = 1.1, um = 0.3, vm = -0.2, pm = 0.9;
  const double rp = 0.6, up = -0.7, vp = 0.4, pp = 1.6;
  const Conserved Um = cons(rm, um, vm, pm), Up = cons(rp, up, vp, pp);
  const double s = um + up;
  Vec4 expect{};
  for (int c = 0; c < 4; ++c) expect[c] = 0.25 * s * (Um[c] + Up[c]) - 0.25 * (std::abs(s) + 4) * (Up[c] - Um[c]);
  expect[1] += 0.5 * (pm + pp) - (up - um);
  expect[2] -= vp - vm;
  expect[3] += 0.5 * (um * pm + up * pp) - 0.5 * (up * up + vp * vp - um * um - vm * vm);
  const Vec4 F = vfv_flux_x(Um, Up, gas);
  for (int c = 0; c < 4; ++c) EXPECT_NEAR(F[c], expect[c], 1e-14);
}

TEST(CuFlux, Examples) {
  const GasModel gas{};
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const Conserved U = test::random_state(rng);
    EXPECT_EQ(cu_flux(U, U, Axis::x, gas), phys_flux_x(U, gas));
  }

  // Symmetric speeds: static states with equal sound speed.
  const Conserved a = cons(1, 0, 0, 1), b = cons(2, 0, 0, 2);
  const double c = std::sqrt(1.4);
  const Vec4 F = cu_flux(a, b, Axis::x, gas);
  const Vec4 Fa = phys_flux_x(a, gas), Fb = phys_flux_x(b, gas);
  for (int m = 0; m < 4; ++m) EXPECT_NEAR(F[m], 0.5 * (Fa[m] + Fb[m]) - 0.5 * c * (b[m] - a[m]), 1e-14);

  // Supersonic to the right on both sides: pure upwinding.
  const Conserved l = cons(1, 3, 0.2, 1), r = cons(0.8, 2.8, -0.1, 0.9);
  const Vec4 G = cu_flux(l, r, Axis::x, gas);
  const Vec4 Fl = phys_flux_x(l, gas);
  for (int m = 0; m < 4; ++m) EXPECT_NEAR(G[m], Fl[m], 1e-13 * (1 + std::abs(Fl[m])));
}

TEST(Consistency, EveryFamilyWithinFourUlps) {
  const GasModel gas{};
  std::mt19937_64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    const Conserved U = test::random_state(rng);
    for (Axis axis : {Axis::x, Axis::y}) {
      const Vec4 F = phys_flux(U, axis, gas);
      for (FluxFamily fam : {FluxFamily::lcdcu, FluxFamily::ldcu, FluxFamily::vfv}) {
        const Vec4 N = numerical_flux(fam, U, U, axis, gas);
        for (int c = 0; c < 4; ++c) EXPECT_LE(test::ulps(N[c], F[c]), 4) << to_string(fam) << " c=" << c;
      }
    }
  }
}

TEST(VfvFlux, XYSymmetry) {
  const GasModel gas{};
  std::mt19937_64 rng(31);
  auto swap = [](const Conserved& U) { return Conserved{{U[0], U[2], U[1], U[3]}}; };
  for (int i = 0; i < 300; ++i) {
    const Conserved a = test::random_state(rng), b = test::random_state(rng);
    const Vec4 F = vfv_flux_x(a, b, gas);
    const Vec4 G = vfv_flux_y(swap(a), swap(b), gas);
    EXPECT_EQ(G[0], F[0]);
    EXPECT_EQ(G[1], F[2]);
    EXPECT_EQ(G[2], F[1]);
    EXPECT_EQ(G[3], F[3]);

    const Vec4 C = cu_flux(a, b, Axis::x, gas);
    const Vec4 D = cu_flux(swap(a), swap(b), Axis::y, gas);
    EXPECT_EQ(D[0], C[0]);
    EXPECT_EQ(D[1], C[2]);
    EXPECT_EQ(D[2], C[1]);
    EXPECT_EQ(D[3], C[3]);
  }
}

namespace {

template <class Prim>
Field first_order_field(int n, Prim prim) {
  return test::field_from(Grid::unit_square(n, n, 1), Boundary::free, prim);
}

}  // namespace

TEST(VfvFirstOrderEnergy, UniformStateIsZero) {
  const Field f = first_order_field(8, [](double, double) { return Primitive{1.3, 0.4, -0.2, 0.8}; });
  for (double r : vfv_first_order_energy_rhs(f, GasModel{})) EXPECT_NEAR(r, 0.0, 1e-13);
}

TEST(VfvFirstOrderEnergy, LinearVelocity) {
  // rho = p = 1, u = x: pressure work gives -1 per interior cell and the
  // kinetic second difference of u^2 gives (2 dx^2) / (2 dx) = dx on top of
  // the upwind divergence.
  const int n = 16;
  const GasModel gas{};
  const Field f = first_order_field(n, [](double x, double) { return Primitive{1, x, 0, 1}; });
  const Grid& g = f.grid();
  const std::vector<double> r = vfv_first_order_energy_rhs(f, gas);
  for (int k = 1; k < n - 1; ++k)
    for (int j = 1; j < n - 1; ++j) {
      const double upw = -(vfv_upwind(f(j, k), f(j + 1, k), Axis::x, gas)[3] -
                           vfv_upwind(f(j - 1, k), f(j, k), Axis::x, gas)[3]) /
                         g.dx;
      EXPECT_NEAR(r[static_cast<std::size_t>(k) * n + j], upw - 1.0 + g.dx, 1e-11);
    }
}

TEST(VfvFirstOrderEnergy, StaticPressureRampIsZero) {
  const int n = 12;
  const Field f = first_order_field(n, [](double x, double) { return Primitive{1, 0, 0, 1 + x}; });
  const Grid& g = f.grid();
  const std::vector<double> r = vfv_first_order_energy_rhs(f, GasModel{});
  // u = 0: no pressure work, no kinetic viscosity; only the upwind jump term
  // of E remains, which is -(E_{j+1} - 2E_j + E_{j-1}) / dx = 0 on linear E.
  for (int k = 0; k < n; ++k)
    for (int j = 1; j < n - 1; ++j) EXPECT_NEAR(r[static_cast<std::size_t>(k) * n + j], 0.0, 1e-11 / g.dx);
}

TEST(VfvFirstOrderEnergy, NeedsGhosts) {
  Field f(Grid::unit_square(4, 4, 0), Boundary::free);
  EXPECT_THROW(vfv_first_order_energy_rhs(f, GasModel{}), ConfigError);
}
