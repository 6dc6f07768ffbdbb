// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qwalk/bessel.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

struct SeriesOptions {
  int order_cap = kDefaultOrderCap;
  // Test hook: sees every Bessel batch before it is summed.
  std::function<void(BesselBatch&)> batch_hook;
};

// Closed forms. Every evaluator returns delta(x, x0) at t = 0 without
// touching the Bessel kernel, and throws std::invalid_argument if the spec
// holds a different boundary regime.

/// e^{-itq} i^|x-x0| J_|x-x0|(2t).
Complex amplitude_unbounded(const WalkSpec& spec, Site x, double t, const SeriesOptions& options = {});

/// Free propagator minus its mirror image about L; vanishes at x = L.
/// Throws std::domain_error for x < L.
Complex amplitude_left_wall(const WalkSpec& spec, Site x, double t, const SeriesOptions& options = {});

/// n-th mirror image of x0 between walls L and R, by the reflection recursion
///   x_n = 2L - x_{-n-1} (n < 0),  x_n = 2R - x_{-n+1} (n > 0).
Site mirror_points(Site L, Site R, Site x0, std::int64_t n);

/// x_{-k}, ..., x_k built by the same recursion; element n + k holds x_n.
std::vector<Site> mirror_image_set(Site L, Site R, Site x0, int k);

/// n N + x0 with N = R - L.
Site periodic_points(Site L, Site R, Site x0, std::int64_t n);

/// e^{-itq} sum_{n=-k}^{k} (-1)^n i^|x-x_n| J_|x-x_n|(2t) for L <= x <= R.
Complex amplitude_dirichlet(const WalkSpec& spec, Site x, double t, int k, const SeriesOptions& options = {});

/// e^{-itq} sum_{n=-k}^{k} i^|x-y_n| J_|x-y_n|(2t) for L <= x <= R. Site R is
/// accepted only so that the identification psi(L) = psi(R) can be checked.
Complex amplitude_periodic(const WalkSpec& spec, Site x, double t, int k, const SeriesOptions& options = {});

/// Series amplitudes on sites x times. Two-sided walks use one truncation
/// order for the whole grid: the largest truncation_k(t, epsilon, N) over the
/// requested times (k is non-decreasing in t). Each time step shares a single
/// Bessel batch across all sites.
///
/// Input problems throw std::invalid_argument / std::domain_error; failures
/// while evaluating a cell are rethrown as GridError.
AmplitudeGrid evaluate_grid(const WalkSpec& spec, std::span<const Site> sites, std::span<const double> times,
                            double epsilon, const SeriesOptions& options = {});

}  // namespace qwalk
