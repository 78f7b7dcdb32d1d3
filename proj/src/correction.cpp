#include <cmath>
#include <array>
#include <string>

#include "dwflow/errors.hpp"
#include "dwflow/rhs.hpp"

namespace dwflow {

namespace {

// Central difference stencils for the even derivatives at the center
// interface, numerators only; divide by denom * h^power.
struct Stencil {
  int power;
  double denom;
  std::array<double, 9> w;  // centered, zero padded to 9 taps
};

struct Block {
  int reach;
  std::array<Stencil, 4> derivs;
  int count;
};

Block block(int order) {
  switch (order) {
    case 3:
      return {1, {{{2, 1.0, {1, -2, 1}}}}, 1};
    case 5:
      return {2,
              {{{2, 12.0, {-1, 16, -30, 16, -1}}, {4, 1.0, {1, -4, 6, -4, 1}}}},
              2};
    case 7:
      return {3,
              {{{2, 180.0, {2, -27, 270, -490, 270, -27, 2}},
                {4, 6.0, {-1, 12, -39, 56, -39, 12, -1}},
                {6, 1.0, {1, -6, 15, -20, 15, -6, 1}}}},
              3};
    case 9:
      return {4,
              {{{2, 5040.0, {-9, 128, -1008, 8064, -14350, 8064, -1008, 128, -9}},
                {4, 240.0, {7, -96, 676, -1952, 2730, -1952, 676, -96, 7}},
                {6, 4.0, {-1, 12, -52, 116, -150, 116, -52, 12, -1}},
                {8, 1.0, {1, -8, 28, -56, 70, -56, 28, -8, 1}}}},
              4};
    default:
      throw ConfigError("no flux correction for order " + std::to_string(order));
  }
}

// Signed coefficients of h^power * derivative in the corrected flux.
double mu(int power) {
  switch (power) {
    case 2: return -CorrectionCoeffs::mu2;
    case 4: return CorrectionCoeffs::mu4;
    case 6: return -CorrectionCoeffs::mu6;
    default: return CorrectionCoeffs::mu8;
  }
}

std::array<double, 9> fold(int order) {
  const Block b = block(order);
  std::array<double, 9> w{};
  w[b.reach] = 1.0;
  for (int d = 0; d < b.count; ++d) {
    const Stencil& s = b.derivs[d];
    for (int i = 0; i < 2 * b.reach + 1; ++i) w[i] += mu(s.power) * s.w[i] / s.denom;
  }
  return w;
}

}  // namespace

int correction_reach(int order) {
  switch (order) {
    case 1:
    case 2: return 0;
    case 3: return 1;
    case 5: return 2;
    case 7: return 3;
    case 9: return 4;
    default: throw ConfigError("unsupported scheme order " + std::to_string(order));
  }
}

std::vector<Vec4> correction_high_order(std::span<const Vec4> line, int order, double h) {
  const Block b = block(order);
  if (!(h > 0.0)) throw ConfigError("mesh size must be positive");
  const int width = 2 * b.reach + 1;
  if (static_cast<int>(line.size()) < width) {
    throw ConfigError("flux line of length " + std::to_string(line.size()) + " is shorter than the order " +
                      std::to_string(order) + " stencil");
  }
  std::vector<Vec4> out;
  out.reserve(line.size() - 2 * b.reach);
  for (std::size_t i = b.reach; i + b.reach < line.size(); ++i) {
    Vec4 f = line[i];
    for (int d = 0; d < b.count; ++d) {
      const Stencil& s = b.derivs[d];
      const double scale = std::pow(h, s.power);
      for (int c = 0; c < 4; ++c) {
        double sum = 0.0;
        for (int m = 0; m < width; ++m) sum += s.w[m] * line[i - b.reach + m][c];
        const double derivative = sum / (s.denom * scale);
        f[c] += mu(s.power) * scale * derivative;
      }
    }
    out.push_back(f);
  }
  return out;
}

std::span<const double> correction_weights(int order) {
  static const std::array<std::array<double, 9>, 4> folded{fold(3), fold(5), fold(7), fold(9)};
  const int reach = correction_reach(order);
  if (reach == 0) throw ConfigError("no flux correction for order " + std::to_string(order));
  return {folded[reach - 1].data(), static_cast<std::size_t>(2 * reach + 1)};
}

}  // namespace dwflow
