// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// Eigen-decomposition of the finite-lattice Hamiltonian.
///
/// Dirichlet: N - 1 sine modes on the interior sites with eigenvalues
/// 2 cos(k pi/N) - q, k = 1..N-1. Periodic: N Fourier modes with eigenvalues
/// 2 cos(2 pi k/N) - q, k = 0..N-1.
struct SpectralModel {
  BoundarySpec boundary;
  double q = 0.0;
  std::vector<double> eigenvalues;
  int mode_count = 0;
};

/// Throws std::invalid_argument for unbounded or left-wall boundaries.
SpectralModel make_spectral_model(const BoundarySpec& boundary, double q);

/// (2 e^{-itq}/N) sum_k sin(pi k (x-L)/N) sin(pi k (x0-L)/N) e^{2it cos(k pi/N)}.
/// Exactly zero at x = L and x = R.
Complex spectral_amplitude_dirichlet(const SpectralModel& model, Site x0, Site x, double t);

/// (e^{-itq}/N) sum_k e^{2 pi i k (x-x0)/N} e^{2it cos(2 pi k/N)}. Accepts
/// x = R, which is the same site as x = L.
Complex spectral_amplitude_periodic(const SpectralModel& model, Site x0, Site x, double t);

/// Spectral amplitudes on sites x times (two-sided walks only).
AmplitudeGrid spectral_grid(const WalkSpec& spec, std::span<const Site> sites, std::span<const double> times);

/// Fixed-step RK4 integration of
///   i d/dt psi(x) = -psi(x-1) + q psi(x) - psi(x+1)
/// on a finite window of sites. Walls and window edges hold psi = 0; periodic
/// walks wrap around.
class LatticeIntegrator {
 public:
  /// Window covers the whole lattice for two-sided walks, and
  /// x0 -+ (2 horizon + window_pad) for open ones (clipped at a left wall).
  LatticeIntegrator(const WalkSpec& spec, double horizon, int window_pad);

  Site first_site() const { return first_; }
  Site last_site() const { return first_ + static_cast<Site>(state_.size()) - 1; }
  double time() const { return time_; }
  std::span<const Complex> state() const { return state_; }

  /// Amplitude at x; zero outside the window.
  Complex at(Site x) const;
  double norm_squared() const;

  /// Replaces the state (same window) and resets the clock to `time`.
  void reset(std::vector<Complex> state, double time = 0.0);

  /// Integrates forward by `duration` using ceil(duration/dt) equal steps.
  void advance(double duration, double dt);

 private:
  void derivative(std::span<const Complex> psi, std::span<Complex> out) const;

  bool periodic_;
  double q_;
  Site first_;
  double time_ = 0.0;
  std::vector<Complex> state_;
  std::vector<Complex> k1_, k2_, k3_, k4_, scratch_;
};

/// Result of ode_evolve.
struct OdeRun {
  WalkSpec spec;
  Site window_first = 0;
  Site window_last = 0;
  double dt = 0.0;
  double time = 0.0;
  std::vector<Complex> state;

  Complex at(Site x) const;
};

/// Integrates |x0> to `horizon`. Requires 0 < dt <= 0.01 and window_pad >= 20
/// (std::invalid_argument otherwise). Throws IntegratorError if the norm
/// drifts by more than 1e-6.
OdeRun ode_evolve(const WalkSpec& spec, double horizon, double dt, int window_pad = 20);

/// ODE amplitudes on sites x times; one integration sweeps through the
/// sorted times.
AmplitudeGrid ode_grid(const WalkSpec& spec, std::span<const Site> sites, std::span<const double> times,
                       double dt = 1e-3, int window_pad = 20);

}  // namespace qwalk
