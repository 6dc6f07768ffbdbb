// SPDX-License-Identifier: Apache-2.0

#include "qwalk/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kRescaleThreshold = 1e250;
constexpr double kRescaleFactor = 1e-250;

void check_argument(double x) {
  if (!std::isfinite(x) || x < 0.0) throw std::domain_error("Bessel argument must be finite and non-negative");
}

// Start order for the backward recurrence. It has to sit above both the
// highest requested order and the turning point n ~ x, where J_n starts to
// decay, by a margin that grows like sqrt(order).
int start_order(double x, int n_max) {
  const int base = std::max(n_max, static_cast<int>(std::ceil(x)));
  const int margin = std::max(20, static_cast<int>(std::ceil(1.2 * std::sqrt(40.0 * base))));
  int start = base + margin;
  if (start % 2 != 0) ++start;
  return start;
}

}  // namespace

BesselBatch bessel_j_batch(double x, int n_max, int order_cap) {
  check_argument(x);
  if (n_max < 0) throw std::domain_error("Bessel order must be non-negative");
  if (n_max > order_cap) throw OrderCapExceeded(n_max, order_cap);

  BesselBatch batch{x, n_max, std::vector<double>(static_cast<std::size_t>(n_max) + 1, 0.0)};
  if (x == 0.0) {
    batch.values[0] = 1.0;
    return batch;
  }

  auto& values = batch.values;
  const int top = start_order(x, n_max);
  const double two_over_x = 2.0 / x;

  // Unnormalised J_{m+1}, J_m walking downwards; `norm` collects
  // J_0 + 2 sum_{k>=1} J_{2k} of the same unnormalised sequence.
  double above = 0.0;
  double current = 1.0;
  double norm = 2.0 * current;  // top is even

  for (int m = top; m >= 1; --m) {
    double below = m * two_over_x * current - above;
    above = current;
    current = below;

    const int order = m - 1;
    if (order <= n_max) values[static_cast<std::size_t>(order)] = current;
    if (order == 0) {
      norm += current;
    } else if (order % 2 == 0) {
      norm += 2.0 * current;
    }

    if (std::abs(current) > kRescaleThreshold) {
      current *= kRescaleFactor;
      above *= kRescaleFactor;
      norm *= kRescaleFactor;
      const int first = std::min(order, n_max + 1);
      for (int j = first; j <= n_max; ++j) values[static_cast<std::size_t>(j)] *= kRescaleFactor;
    }
  }

  const double scale = 1.0 / norm;
  for (double& v : values) v *= scale;
  return batch;
}

double bessel_j(int n, double x, int order_cap) {
  return bessel_j_batch(x, n, order_cap).values[static_cast<std::size_t>(n)];
}

Complex i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

Complex bessel_j_tilde(int n, double x, int order_cap) {
  return i_power(n) * bessel_j(n, x, order_cap);
}

double bessel_j_integral_oracle(int n, double x, int nodes) {
  if (n < 0 || n > 50) throw std::domain_error("integral oracle supports orders 0..50");
  if (!std::isfinite(x) || std::abs(x) > 50.0) throw std::domain_error("integral oracle supports |x| <= 50");
  if (nodes < 2) throw std::domain_error("integral oracle needs at least 2 panels");

  // Real part of i^-n exp(i x cos w) cos(n w): cos(x cos w - n pi/2) cos(n w).
  // The integrand is even and 2pi-periodic, so the trapezoid rule converges
  // geometrically.
  const double phase = 0.5 * std::numbers::pi * n;
  auto integrand = [&](double w) { return std::cos(x * std::cos(w) - phase) * std::cos(n * w); };

  const double h = std::numbers::pi / nodes;
  double sum = 0.5 * (integrand(0.0) + integrand(std::numbers::pi));
  for (int j = 1; j < nodes; ++j) sum += integrand(j * h);
  return sum * h / std::numbers::pi;
}

}  // namespace qwalk
