// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace qwalk {

/// Truncation order for the image series of a two-sided walk of length N,
/// chosen so that every amplitude is accurate to `epsilon` at time `t`.
struct TruncationPlan {
  int k = 1;
  double zeta = 0.0;         // ansatz value at the requested t
  double t_threshold = 1.0;  // smallest t for which the closed-form k is proven
  double epsilon = 0.0;
  int N = 1;
  double t = 0.0;
  double apriori_bound = 0.0;  // tail bound at the chosen k
  bool fallback_used = false;  // t <= t_threshold
};

/// c = 22 / (e sqrt(2 pi)).
double constant_c();

/// zeta = 2 ln t + ln(c / (epsilon sqrt t)) / N.
/// Throws std::domain_error unless t > 0 and 0 < epsilon < 1.
double zeta(double t, double epsilon, int N);

/// max{1, (e^e (epsilon/c)^(1/N))^(2N/(4N-1))}; zeta >= e above it.
double t_threshold(double epsilon, int N);

/// k = ceil(((t + N)/N) zeta / ln zeta) for t > t_threshold. At or below the
/// threshold the closed form is not covered by the error estimate, and the
/// plan falls back to max(ceil(t e/N) + 1, k at the threshold).
TruncationPlan truncation_k(double t, double epsilon, int N);

/// Tail bound for the k-term image series
///   2 t^(2N) / sqrt(2 pi N k) * (t e/(k N))^(N k) / (1 - (t e/(k N))^N),
/// evaluated in log space. Only defined for k > t e / N, where the geometric
/// tail converges; throws std::domain_error otherwise.
double apriori_error_bound(int k, double t, int N);

/// Tighter numeric bound: the first `terms` summands of
///   2 t^(2N) sum_{n>=k} t^(nN) / (nN)!
/// computed exactly (log space), plus apriori_error_bound(k + terms, t, N)
/// for the remainder.
double factorial_tail_bound(int k, double t, int N, int terms);

}  // namespace qwalk
