#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dwflow/diagnostics.hpp"
#include "dwflow/errors.hpp"
#include "dwflow/problems.hpp"
#include "support.hpp"

using namespace dwflow;

namespace {

Field constant(int n, Primitive w) {
  return test::field_from(Grid::unit_square(n, n, 0), Boundary::periodic, [w](double, double) { return w; });
}

}  // namespace

TEST(OrderIndex, Mapping) {
  EXPECT_EQ(order_index(1), 1);
  EXPECT_EQ(order_index(2), 2);
  EXPECT_EQ(order_index(3), 3);
  EXPECT_EQ(order_index(5), 4);
  EXPECT_EQ(order_index(7), 5);
  EXPECT_EQ(order_index(9), 6);
  EXPECT_THROW(order_index(4), ConfigError);
}

TEST(Cesaro, Examples) {
  const GasModel gas{};
  const std::vector<Field> fam{constant(4, {1, 0, 0, 1}), constant(4, {3, 0, 0, 1})};
  OrderAverage a = cesaro_average(fam, 1, gas);
  for (double r : a.rho) EXPECT_EQ(r, 1.0);
  a = cesaro_average(fam, 2, gas);
  for (double r : a.rho) EXPECT_EQ(r, 2.0);
  EXPECT_THROW(cesaro_average(fam, 3, gas), ConfigError);
  const std::vector<Field> mixed{constant(4, {1, 0, 0, 1}), constant(8, {1, 0, 0, 1})};
  EXPECT_THROW(cesaro_average(mixed, 2, gas), ConfigError);
}

TEST(Cesaro, MonotoneErrorHarness) {
  // Member l = g + eps/l * h: the averages approach their limit monotonically.
  const GasModel gas{};
  const int n = 8;
  std::vector<Field> fam;
  for (int l = 1; l <= 6; ++l)
    fam.push_back(test::field_from(Grid::unit_square(n, n, 0), Boundary::periodic, [l](double x, double y) {
      return Primitive{1.5 + 0.3 / l * std::sin(6.0 * x + y), 0, 0, 1};
    }));
  const OrderAverage ref = cesaro_average(fam, 6, gas);
  double prev = INFINITY;
  for (int m = 1; m <= 5; ++m) {
    const double e = l1_distance(cesaro_average(fam, m, gas).rho, ref.rho, ref.grid);
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(TimeAverage, Examples) {
  const Grid g = Grid::unit_square(3, 3, 0);
  TimeAverage acc(g);
  acc.accumulate(constant(3, {1, 0, 0, 1}), 0.5);
  acc.accumulate(constant(3, {3, 0, 0, 1}), 0.5);
  const Field avg = acc.finalize(1.0);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(avg(j, k).rho(), 2.0);

  TimeAverage c(g);
  for (int i = 0; i < 4; ++i) c.accumulate(constant(3, {1.25, 0, 0, 1}), 0.25);
  EXPECT_DOUBLE_EQ(c.finalize(1.0)(1, 1).rho(), 1.25);

  TimeAverage short_acc(g);
  short_acc.accumulate(constant(3, {1, 0, 0, 1}), 0.5);
  EXPECT_THROW(short_acc.finalize(1.0), ConfigError);
  EXPECT_THROW(short_acc.finalize(0.0), ConfigError);
  EXPECT_THROW(short_acc.accumulate(constant(3, {1, 0, 0, 1}), 0.0), ConfigError);
}

TEST(YoungPdf, FiftyFifty) {
  std::vector<double> v(100);
  for (int i = 0; i < 100; ++i) v[i] = i % 2 ? 2.0 : 1.0;
  const YoungPDF p = young_pdf(v);
  EXPECT_FALSE(p.degenerate);
  EXPECT_DOUBLE_EQ(p.bin_width, 1.0 / 30);
  EXPECT_EQ(p.sigma[0], 15.0);
  EXPECT_EQ(p.sigma[29], 15.0);
  for (int i = 1; i < 29; ++i) EXPECT_EQ(p.sigma[i], 0.0);
  EXPECT_NEAR(p.mass(), 1.0, 1e-12);
}

TEST(YoungPdf, FromSubdomain) {
  // 10x10 cells inside [0, 0.1]^2 of a 100^2 mesh: 50 at rho = 1, 50 at rho = 2.
  const int n = 100;
  const Field f = test::field_from(Grid::unit_square(n, n, 0), Boundary::free, [](double x, double) {
    return Primitive{x < 0.05 ? 1.0 : 2.0, 0, 0, 1};
  });
  const Rect r{0.0, 0.1, 0.0, 0.1};
  EXPECT_EQ(subdomain_densities(f, r).size(), 100u);
  const YoungPDF p = young_pdf(f, r);
  EXPECT_EQ(p.samples, 100u);
  EXPECT_EQ(p.sigma[0], 15.0);
  EXPECT_EQ(p.sigma[29], 15.0);
  EXPECT_THROW(young_pdf(f, Rect{0.0001, 0.0002, 0.5, 0.5001}), ConfigError);
  EXPECT_FALSE(holds_cell_center(f.grid(), Rect{0.0001, 0.0002, 0.5, 0.5001}));
  EXPECT_TRUE(holds_cell_center(f.grid(), r));
}

TEST(YoungPdf, DegenerateAndMass) {
  const YoungPDF d = young_pdf(std::vector<double>(7, 1.3));
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.bin_width, 0.0);
  EXPECT_EQ(d.mass(), 1.0);
  EXPECT_THROW(young_pdf(std::vector<double>{}), ConfigError);
  EXPECT_THROW(young_pdf(std::vector<double>{1.0}, 2.0, 1.0), ConfigError);

  std::mt19937_64 rng(37);
  std::lognormal_distribution<double> dist(0.0, 0.5);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> v(1 + t * 37);
    for (double& x : v) x = dist(rng);
    const YoungPDF p = young_pdf(v);
    if (!p.degenerate) EXPECT_NEAR(p.mass(), 1.0, 1e-12);
  }
}

TEST(PdfAverage, Examples) {
  std::vector<double> a{1, 1, 2, 3}, b{1, 2, 2, 3};
  const YoungPDF pa = young_pdf(a, 1, 3), pb = young_pdf(b, 1, 3);
  const std::vector<YoungPDF> one{pa};
  EXPECT_EQ(pdf_average(one, 1).sigma, pa.sigma);
  const std::vector<YoungPDF> same{pa, pa};
  EXPECT_EQ(pdf_average(same, 2).sigma, pa.sigma);
  const std::vector<YoungPDF> two{pa, pb};
  const YoungPDF m = pdf_average(two, 2);
  for (int i = 0; i < kPdfBins; ++i) EXPECT_DOUBLE_EQ(m.sigma[i], 0.5 * (pa.sigma[i] + pb.sigma[i]));
  EXPECT_NEAR(m.mass(), 1.0, 1e-12);
  const std::vector<YoungPDF> bad{pa, young_pdf(b, 0, 3)};
  EXPECT_THROW(pdf_average(bad, 2), ConfigError);
}

TEST(L1Distance, Examples) {
  const Field f = constant(8, {1, 0, 0, 1}), g = constant(8, {1.5, 0, 0, 1});
  EXPECT_EQ(l1_density_distance(f, f), 0.0);
  EXPECT_DOUBLE_EQ(l1_density_distance(f, g), 0.5);
  EXPECT_THROW(l1_density_distance(f, constant(4, {1, 0, 0, 1})), ConfigError);
}

TEST(PowerLawFit, Examples) {
  std::vector<double> e;
  for (int n = 1; n <= 5; ++n) e.push_back(0.01 * std::pow(n, -2.0));
  PowerLaw p = powerlaw_fit(e);
  EXPECT_NEAR(p.C, 0.01, 1e-10);
  EXPECT_NEAR(p.alpha, -2.0, 1e-10);
  p = powerlaw_fit(std::vector<double>(5, 0.3));
  EXPECT_NEAR(p.alpha, 0.0, 1e-14);
  EXPECT_NEAR(p.C, 0.3, 1e-14);
  EXPECT_THROW(powerlaw_fit(std::vector<double>{0.1, 0.0, 0.2}), ConfigError);
  EXPECT_THROW(powerlaw_fit(std::vector<double>{0.1}), ConfigError);
}

TEST(Functionals, SingleMemberHasNoDefect) {
  const GasModel gas{};
  const Field f = init_kh(Grid::unit_square(32, 32, 0));
  const std::vector<Field> fam{f};
  const FunctionalSample s = functionals(fam, 1, gas);
  EXPECT_NEAR(s.DE, 0.0, 1e-12);
  EXPECT_NEAR(s.E1, s.E2, 1e-12);
  EXPECT_NEAR(s.E1, 6.4375, 1e-6);
  EXPECT_NEAR(s.E1, f.integral()[3], 1e-13);
  EXPECT_NEAR(s.S, integrate([&] {
                std::vector<double> v;
                for (const Conserved& U : f.interior()) v.push_back(entropy_density(U, gas));
                return v;
              }(), f.grid()), 1e-13);
}

TEST(Functionals, IdenticalMembersAndNonNegativeDefect) {
  const GasModel gas{};
  const Field f = init_kh(Grid::unit_square(16, 16, 0));
  const std::vector<Field> same(4, f);
  for (int n = 1; n <= 4; ++n) EXPECT_NEAR(functionals(same, n, gas).DE, 0.0, 1e-12);

  const std::vector<Field> diff{constant(8, {1, 0.2, 0, 1}), constant(8, {2, -0.3, 0.1, 3})};
  const FunctionalSample s = functionals(diff, 2, gas);
  EXPECT_GT(s.DE, 0.0);
  // Entropy is concave in U, so the averaged entropy lies below that of the
  // averaged state and E2 = E(rho~, m~, S~) <= E1.
  EXPECT_LE(s.E2, s.E1);
}

TEST(EnergyFromEntropy, InvertsEntropy) {
  const GasModel gas{};
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const Conserved U = test::random_state(rng);
    EXPECT_NEAR(energy_from_entropy(U.rho(), U.mx(), U.my(), entropy_density(U, gas), gas), U.E(), 1e-12 * U.E());
  }
  EXPECT_THROW(energy_from_entropy(0.0, 0, 0, 0, gas), InvalidState);
}

TEST(MinSpecificEntropy, Examples) {
  const GasModel gas{};
  EXPECT_EQ(min_specific_entropy(constant(4, {1, 0, 0, 1}), gas), 0.0);
  const Field kh = init_kh(Grid::unit_square(32, 32, 0));
  EXPECT_NEAR(min_specific_entropy(kh, gas), 2.5 * std::log(2.5 / std::pow(2.0, 1.4)), 1e-12);
  EXPECT_NEAR(min_specific_entropy(kh, gas), -0.13529, 1e-5);
}

TEST(Integrate, RowSums) {
  const Grid g = Grid::unit_square(4, 2, 0);
  EXPECT_DOUBLE_EQ(integrate(std::vector<double>(8, 3.0), g), 3.0);
  EXPECT_THROW(integrate(std::vector<double>(7, 3.0), g), ConfigError);
}
