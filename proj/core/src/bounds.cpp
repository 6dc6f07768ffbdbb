// SPDX-License-Identifier: Apache-2.0

#include "qwalk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

using std::numbers::e;
using std::numbers::pi;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("epsilon must lie in (0, 1)");
}

void check_length(int N) {
  if (N < 1) throw std::domain_error("lattice length N must be positive");
}

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("t must be positive and finite");
}

int ceil_to_int(double value) {
  const double c = std::ceil(value);
  if (!(c < static_cast<double>(std::numeric_limits<int>::max())))
    throw std::domain_error("truncation order overflows int");
  return std::max(1, static_cast<int>(c));
}

// ((t + N)/N) * zeta / ln zeta, unrounded.
double ansatz(double t, int N, double z) { return (t + N) / N * z / std::log(z); }

// log of 2 t^(2N) / sqrt(2 pi N k) * r^(N k) / (1 - r^N), r = t e / (k N).
double log_tail_bound(int k, double t, int N) {
  const double kN = static_cast<double>(k) * N;
  const double log_ratio = std::log(t * e / kN);  // < 0
  return std::log(2.0) + 2.0 * N * std::log(t) - 0.5 * std::log(2.0 * pi * kN) + kN * log_ratio -
         std::log1p(-std::exp(N * log_ratio));
}

}  // namespace

double constant_c() { return 22.0 / (e * std::sqrt(2.0 * pi)); }

double zeta(double t, double epsilon, int N) {
  check_time(t);
  check_epsilon(epsilon);
  check_length(N);
  return 2.0 * std::log(t) + std::log(constant_c() / (epsilon * std::sqrt(t))) / N;
}

double t_threshold(double epsilon, int N) {
  check_epsilon(epsilon);
  check_length(N);
  const double base_log = e + std::log(epsilon / constant_c()) / N;
  const double exponent = 2.0 * N / (4.0 * N - 1.0);
  return std::max(1.0, std::exp(exponent * base_log));
}

TruncationPlan truncation_k(double t, double epsilon, int N) {
  check_time(t);
  TruncationPlan plan;
  plan.epsilon = epsilon;
  plan.N = N;
  plan.t = t;
  plan.t_threshold = t_threshold(epsilon, N);
  plan.zeta = zeta(t, epsilon, N);

  if (t > plan.t_threshold) {
    plan.k = ceil_to_int(ansatz(t, N, plan.zeta));
    plan.fallback_used = false;
  } else {
    const double z_threshold = std::max(e, zeta(plan.t_threshold, epsilon, N));
    const int at_threshold = ceil_to_int(ansatz(plan.t_threshold, N, z_threshold));
    const int convergent = ceil_to_int(t * e / N) + 1;
    plan.k = std::max(at_threshold, convergent);
    plan.fallback_used = true;
  }
  plan.apriori_bound = apriori_error_bound(plan.k, t, N);
  return plan;
}

double apriori_error_bound(int k, double t, int N) {
  check_time(t);
  check_length(N);
  if (k < 1 || !(static_cast<double>(k) > t * e / N))
    throw std::domain_error("tail bound requires k > t e / N");
  // Deep tails underflow; the smallest positive double is still an upper bound.
  return std::max(std::exp(log_tail_bound(k, t, N)), std::numeric_limits<double>::denorm_min());
}

double factorial_tail_bound(int k, double t, int N, int terms) {
  check_time(t);
  check_length(N);
  if (k < 1 || terms < 1) throw std::domain_error("k and terms must be positive");

  const double log_prefactor = std::log(2.0) + 2.0 * N * std::log(t);
  const double log_t = std::log(t);
  double partial = 0.0;
  for (int n = k; n < k + terms; ++n) {
    const double nN = static_cast<double>(n) * N;
    partial += std::exp(log_prefactor + nN * log_t - std::lgamma(nN + 1.0));
  }
  return partial + apriori_error_bound(k + terms, t, N);
}

}  // namespace qwalk
