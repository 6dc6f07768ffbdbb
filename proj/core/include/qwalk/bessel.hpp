// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// Default upper limit on the orders a single batch may request.
inline constexpr int kDefaultOrderCap = 10000;

/// J_0(x), ..., J_{max_order}(x) for one argument.
struct BesselBatch {
  double argument = 0.0;
  int max_order = 0;
  std::vector<double> values;

  double operator[](int n) const { return values[static_cast<std::size_t>(n)]; }
};

/// Integer-order Bessel functions of the first kind J_0(x)..J_{n_max}(x), x >= 0.
///
/// Uses Miller's backward recurrence started well above max(n_max, x) and
/// normalised with J_0 + 2 sum_k J_{2k} = 1, so the same code path serves the
/// oscillatory (n < x) and the decaying (n > x) regime. Absolute error stays
/// below 1e-12 for x <= 200, n_max <= 400.
///
/// Throws std::domain_error for x < 0 (or non-finite) and n_max < 0, and
/// OrderCapExceeded when n_max > order_cap.
BesselBatch bessel_j_batch(double x, int n_max, int order_cap = kDefaultOrderCap);

/// Single order; bit-identical to bessel_j_batch(x, n)[n].
double bessel_j(int n, double x, int order_cap = kDefaultOrderCap);

/// i^n, exact.
Complex i_power(int n);

/// The phase-twisted value i^n J_n(x).
Complex bessel_j_tilde(int n, double x, int order_cap = kDefaultOrderCap);

/// Reference value of J_n(x) from the integral representation
///   J_n(x) = (i^-n / pi) int_0^pi exp(i x cos w) cos(n w) dw
/// with a composite trapezoid rule over `nodes` panels. Oracle scale only:
/// n <= 50 and |x| <= 50.
double bessel_j_integral_oracle(int n, double x, int nodes = 4000);

}  // namespace qwalk
