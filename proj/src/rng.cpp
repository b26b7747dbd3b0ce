#include "coopsir/rng.hpp"

#include <cassert>
#include <cmath>

namespace coopsir {
namespace {

// Marsaglia-Tsang ziggurat tables for the Exp(1) density, 256 layers.
// Layer edges x0 > x1 = R > ... > x256 = 0; every layer has area V, the
// bottom layer's rectangle plus the analytic tail also has area V.
constexpr int kLayers = 256;
constexpr double kR = 7.69711747013104972;
constexpr double kV = 3.9496598225815571993e-3;

struct ZigguratTables {
  double x[kLayers + 1];
  double y[kLayers + 1];  // y[k] = exp(-x[k])
  ZigguratTables() {
    x[0] = kV * std::exp(kR);  // virtual width of the base layer
    x[1] = kR;
    y[0] = std::exp(-kR);  // base layer uses f(R) as its flat top
    y[1] = std::exp(-kR);
    for (int k = 2; k <= kLayers; ++k) {
      y[k] = y[k - 1] + kV / x[k - 1];
      x[k] = (k == kLayers) ? 0.0 : -std::log(y[k]);
    }
    // the (R, V) pair above closes the construction: y[256] == 1
    assert(std::abs(y[kLayers] - 1.0) < 1e-9);
  }
};

const ZigguratTables zig;

}  // namespace

double RandomStream::exp1() {
  for (;;) {
    const std::uint64_t bits = next_u64();
    const int k = static_cast<int>(bits & 0xff);
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    const double x = u * zig.x[k];
    if (x < zig.x[k + 1]) return x;  // strictly inside the layer
    if (k == 0) {
      // tail beyond R: memoryless restart
      return kR - std::log1p(-uniform01());
    }
    // wedge between the layer rectangle and the density
    const double y = zig.y[k] + uniform01() * (zig.y[k + 1] - zig.y[k]);
    if (y < std::exp(-x)) return x;
  }
}

std::uint64_t RandomStream::poisson(double lambda) {
  assert(lambda >= 0.0);
  std::uint64_t total = 0;
  // split large means so the Knuth product never underflows
  while (lambda > 30.0) {
    double part = 30.0;
    lambda -= 30.0;
    const double limit = std::exp(-part);
    double prod = uniform01();
    while (prod > limit) {
      ++total;
      prod *= uniform01();
    }
  }
  if (lambda <= 0.0) return total;
  const double limit = std::exp(-lambda);
  double prod = uniform01();
  while (prod > limit) {
    ++total;
    prod *= uniform01();
  }
  return total;
}

std::uint64_t RandomStream::binomial(std::uint64_t n, double p) {
  assert(p >= 0.0 && p <= 1.0);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (uniform01() < p) ++hits;
  }
  return hits;
}

std::uint64_t RandomStream::geometric(double p) {
  assert(p > 0.0 && p <= 1.0);
  if (p >= 1.0) return 0;
  // inversion: floor(log(U) / log(1-p)) with U on (0, 1]
  const double u = 1.0 - uniform01();
  return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

}  // namespace coopsir
