// SPDX-License-Identifier: Apache-2.0

// Independent reference values for the tests. Nothing here calls into the
// library's evaluation paths.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace qwalk::reference {

using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

/// J_n(x) from the ascending series sum_m (-1)^m (x/2)^(2m+n) / (m! (m+n)!),
/// summed in 400-bit floating point so cancellation is harmless for x <= 200.
inline double bessel_power_series(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const Wide half = Wide(x) / 2;
  const Wide half_sq = half * half;
  Wide term = 1;
  for (int j = 1; j <= n; ++j) term *= half / j;
  Wide sum = term;
  const int max_terms = 40 + static_cast<int>(3 * x);
  for (int m = 1; m < max_terms; ++m) {
    term *= -half_sq / (Wide(m) * (m + n));
    sum += term;
  }
  return static_cast<double>(sum);
}

/// i^n J_n(x) for n >= 0.
inline std::complex<double> bessel_tilde_series(int n, double x) {
  static constexpr std::complex<double> kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[n % 4] * bessel_power_series(n, x);
}

/// Closed form of the reflection images between walls L and R:
/// x_{2m} = x0 + 2mN, x_{2m+1} = 2R - x0 + 2mN.
inline std::int64_t mirror_closed_form(std::int64_t L, std::int64_t R, std::int64_t x0, std::int64_t n) {
  const std::int64_t N = R - L;
  const std::int64_t m = (n >= 0) ? n / 2 : -((-n + 1) / 2);
  return (n - 2 * m == 0) ? x0 + 2 * m * N : 2 * R - x0 + 2 * m * N;
}

/// Dense propagator exp(i H t) |x0> for a two-sided lattice built from the
/// tridiagonal (or circulant) matrix, diagonalised with a cyclic Jacobi sweep.
/// Sites are L+1..R-1 (dirichlet) or L..R-1 (periodic).
inline std::vector<std::complex<double>> dense_propagate(std::int64_t L, std::int64_t R, std::int64_t x0, double q,
                                                         double t, bool periodic) {
  const std::int64_t first = periodic ? L : L + 1;
  const int n = static_cast<int>(periodic ? R - L : R - L - 1);
  std::vector<double> a(static_cast<std::size_t>(n * n), 0.0);
  std::vector<double> v(static_cast<std::size_t>(n * n), 0.0);
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i * n + j)]; };
  for (int i = 0; i < n; ++i) {
    A(i, i) = -q;
    V(i, i) = 1.0;
  }
  for (int i = 0; i + 1 < n; ++i) {
    A(i, i + 1) += 1.0;
    A(i + 1, i) += 1.0;
  }
  if (periodic && n >= 2) {
    A(0, n - 1) += 1.0;
    A(n - 1, 0) += 1.0;
  } else if (periodic && n == 1) {
    A(0, 0) += 2.0;
  }

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int r = p + 1; r < n; ++r) {
        if (std::abs(A(p, r)) < 1e-300) continue;
        const double theta = (A(r, r) - A(p, p)) / (2.0 * A(p, r));
        const double tan = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tan * tan + 1.0);
        const double s = tan * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p);
          const double akr = A(k, r);
          A(k, p) = c * akp - s * akr;
          A(k, r) = s * akp + c * akr;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k);
          const double ark = A(r, k);
          A(p, k) = c * apk - s * ark;
          A(r, k) = s * apk + c * ark;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkr = V(k, r);
          V(k, p) = c * vkp - s * vkr;
          V(k, r) = s * vkp + c * vkr;
        }
      }
    }
  }

  const int start = static_cast<int>(x0 - first);
  std::vector<std::complex<double>> psi(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::complex<double> sum{0.0, 0.0};
    for (int k = 0; k < n; ++k) sum += V(x, k) * V(start, k) * std::polar(1.0, t * A(k, k));
    psi[static_cast<std::size_t>(x)] = sum;
  }
  return psi;
}

}  // namespace qwalk::reference
