// SPDX-License-Identifier: Apache-2.0

#include "qwalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qwalk {

namespace {

using std::numbers::pi;

constexpr double kNormDriftLimit = 1e-6;

struct Window {
  Site first;
  Site last;
  bool periodic;
};

Window window_for(const WalkSpec& spec, double horizon, int window_pad) {
  const Site reach = static_cast<Site>(std::ceil(2.0 * horizon)) + window_pad;
  if (const auto* d = std::get_if<Dirichlet>(&spec.boundary)) return {d->left + 1, d->right - 1, false};
  if (const auto* p = std::get_if<Periodic>(&spec.boundary)) return {p->left, p->right - 1, true};
  if (const auto* w = std::get_if<LeftWall>(&spec.boundary))
    return {std::max(w->left + 1, spec.x0 - reach), spec.x0 + reach, false};
  return {spec.x0 - reach, spec.x0 + reach, false};
}

void check_drift(double norm_squared, double time) {
  if (std::abs(norm_squared - 1.0) > kNormDriftLimit)
    throw IntegratorError("RK4 norm drift " + std::to_string(std::abs(norm_squared - 1.0)) + " at t=" +
                          std::to_string(time));
}

}  // namespace

SpectralModel make_spectral_model(const BoundarySpec& boundary, double q) {
  SpectralModel model{boundary, q, {}, 0};
  if (const auto* d = std::get_if<Dirichlet>(&boundary)) {
    const auto N = d->right - d->left;
    if (N < 2) throw std::invalid_argument("R: Dirichlet lattice needs R - L >= 2");
    for (std::int64_t k = 1; k < N; ++k)
      model.eigenvalues.push_back(2.0 * std::cos(k * pi / static_cast<double>(N)) - q);
  } else if (const auto* p = std::get_if<Periodic>(&boundary)) {
    const auto N = p->right - p->left;
    if (N < 1) throw std::invalid_argument("R: periodic lattice needs L < R");
    for (std::int64_t k = 0; k < N; ++k)
      model.eigenvalues.push_back(2.0 * std::cos(2.0 * pi * k / static_cast<double>(N)) - q);
  } else {
    throw std::invalid_argument("boundary: spectral model needs a dirichlet or periodic lattice");
  }
  model.mode_count = static_cast<int>(model.eigenvalues.size());
  return model;
}

Complex spectral_amplitude_dirichlet(const SpectralModel& model, Site x0, Site x, double t) {
  const auto* walls = std::get_if<Dirichlet>(&model.boundary);
  if (walls == nullptr) throw std::invalid_argument("spectral_amplitude_dirichlet needs a Dirichlet model");
  const Site L = walls->left;
  const Site R = walls->right;
  if (x0 <= L || x0 >= R) throw std::domain_error("x0 must satisfy L < x0 < R");
  if (x < L || x > R) throw std::domain_error("site lies outside [L, R]");
  if (x == L || x == R) return {0.0, 0.0};

  const double N = static_cast<double>(R - L);
  Complex sum{0.0, 0.0};
  for (int k = 1; k <= model.mode_count; ++k) {
    const double weight = std::sin(pi * k * static_cast<double>(x - L) / N) *
                          std::sin(pi * k * static_cast<double>(x0 - L) / N);
    sum += weight * std::polar(1.0, t * model.eigenvalues[static_cast<std::size_t>(k - 1)]);
  }
  return 2.0 / N * sum;
}

Complex spectral_amplitude_periodic(const SpectralModel& model, Site x0, Site x, double t) {
  const auto* ring = std::get_if<Periodic>(&model.boundary);
  if (ring == nullptr) throw std::invalid_argument("spectral_amplitude_periodic needs a periodic model");
  const Site L = ring->left;
  const Site R = ring->right;
  if (x0 < L || x0 >= R) throw std::domain_error("x0 must satisfy L <= x0 < R");
  if (x < L || x > R) throw std::domain_error("site lies outside [L, R]");

  const Site N = R - L;
  const Site offset = ((x - x0) % N + N) % N;
  Complex sum{0.0, 0.0};
  for (int k = 0; k < model.mode_count; ++k) {
    const double angle = 2.0 * pi * static_cast<double>((k * offset) % N) / static_cast<double>(N);
    sum += std::polar(1.0, angle + t * model.eigenvalues[static_cast<std::size_t>(k)]);
  }
  return sum / static_cast<double>(N);
}

AmplitudeGrid spectral_grid(const WalkSpec& spec, std::span<const Site> sites, std::span<const double> times) {
  spec.validate();
  const SpectralModel model = make_spectral_model(spec.boundary, spec.q);
  const bool periodic = std::holds_alternative<Periodic>(spec.boundary);
  for (Site x : sites)
    if (!is_lattice_site(spec, x)) throw std::domain_error("site " + std::to_string(x) + " is outside the lattice");

  AmplitudeGrid grid;
  grid.spec = spec;
  grid.sites.assign(sites.begin(), sites.end());
  grid.times.assign(times.begin(), times.end());
  grid.data.resize(sites.size() * times.size());
  grid.method = Method::spectral;
  for (std::size_t i = 0; i < sites.size(); ++i)
    for (std::size_t j = 0; j < times.size(); ++j)
      grid.at(i, j) = periodic ? spectral_amplitude_periodic(model, spec.x0, sites[i], times[j])
                               : spectral_amplitude_dirichlet(model, spec.x0, sites[i], times[j]);
  return grid;
}

LatticeIntegrator::LatticeIntegrator(const WalkSpec& spec, double horizon, int window_pad) : q_(spec.q) {
  spec.validate();
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw std::invalid_argument("horizon must be non-negative");
  const Window window = window_for(spec, horizon, window_pad);
  periodic_ = window.periodic;
  first_ = window.first;
  const auto size = static_cast<std::size_t>(window.last - window.first + 1);
  state_.assign(size, Complex{0.0, 0.0});
  state_[static_cast<std::size_t>(spec.x0 - first_)] = 1.0;
  for (auto* v : {&k1_, &k2_, &k3_, &k4_, &scratch_}) v->resize(size);
}

Complex LatticeIntegrator::at(Site x) const {
  if (x < first_ || x > last_site()) return {0.0, 0.0};
  return state_[static_cast<std::size_t>(x - first_)];
}

double LatticeIntegrator::norm_squared() const {
  return std::accumulate(state_.begin(), state_.end(), 0.0,
                         [](double acc, const Complex& z) { return acc + std::norm(z); });
}

void LatticeIntegrator::reset(std::vector<Complex> state, double time) {
  if (state.size() != state_.size()) throw std::invalid_argument("state size does not match the window");
  state_ = std::move(state);
  time_ = time;
}

void LatticeIntegrator::derivative(std::span<const Complex> psi, std::span<Complex> out) const {
  constexpr Complex I{0.0, 1.0};
  const std::size_t n = psi.size();
  for (std::size_t j = 0; j < n; ++j) {
    Complex left{0.0, 0.0};
    Complex right{0.0, 0.0};
    if (j > 0) {
      left = psi[j - 1];
    } else if (periodic_) {
      left = psi[n - 1];
    }
    if (j + 1 < n) {
      right = psi[j + 1];
    } else if (periodic_) {
      right = psi[0];
    }
    out[j] = I * (left + right - q_ * psi[j]);
  }
}

void LatticeIntegrator::advance(double duration, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(duration >= 0.0)) throw std::invalid_argument("duration must be non-negative");
  if (duration == 0.0) return;
  const auto steps = std::max(1L, static_cast<long>(std::ceil(duration / dt - 1e-9)));
  const double h = duration / static_cast<double>(steps);
  const std::size_t n = state_.size();

  for (long s = 0; s < steps; ++s) {
    derivative(state_, k1_);
    for (std::size_t j = 0; j < n; ++j) scratch_[j] = state_[j] + 0.5 * h * k1_[j];
    derivative(scratch_, k2_);
    for (std::size_t j = 0; j < n; ++j) scratch_[j] = state_[j] + 0.5 * h * k2_[j];
    derivative(scratch_, k3_);
    for (std::size_t j = 0; j < n; ++j) scratch_[j] = state_[j] + h * k3_[j];
    derivative(scratch_, k4_);
    for (std::size_t j = 0; j < n; ++j) state_[j] += h / 6.0 * (k1_[j] + 2.0 * k2_[j] + 2.0 * k3_[j] + k4_[j]);
  }
  time_ += duration;
}

Complex OdeRun::at(Site x) const {
  if (x < window_first || x > window_last) return {0.0, 0.0};
  return state[static_cast<std::size_t>(x - window_first)];
}

OdeRun ode_evolve(const WalkSpec& spec, double horizon, double dt, int window_pad) {
  if (!(dt > 0.0 && dt <= 0.01)) throw std::invalid_argument("dt: must lie in (0, 0.01]");
  if (window_pad < 20) throw std::invalid_argument("window_pad: must be at least 20");
  LatticeIntegrator integrator(spec, horizon, window_pad);
  integrator.advance(horizon, dt);
  check_drift(integrator.norm_squared(), horizon);
  const auto state = integrator.state();
  return {spec, integrator.first_site(), integrator.last_site(), dt, horizon, {state.begin(), state.end()}};
}

AmplitudeGrid ode_grid(const WalkSpec& spec, std::span<const Site> sites, std::span<const double> times, double dt,
                       int window_pad) {
  if (!(dt > 0.0 && dt <= 0.01)) throw std::invalid_argument("dt: must lie in (0, 0.01]");
  if (window_pad < 20) throw std::invalid_argument("window_pad: must be at least 20");
  for (double t : times)
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("t must be finite and non-negative");
  for (Site x : sites)
    if (!is_lattice_site(spec, x)) throw std::domain_error("site " + std::to_string(x) + " is outside the lattice");

  AmplitudeGrid grid;
  grid.spec = spec;
  grid.sites.assign(sites.begin(), sites.end());
  grid.times.assign(times.begin(), times.end());
  grid.data.resize(sites.size() * times.size());
  grid.method = Method::ode;
  if (times.empty()) return grid;

  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return times[a] < times[b]; });

  LatticeIntegrator integrator(spec, times[order.back()], window_pad);
  for (std::size_t j : order) {
    integrator.advance(std::max(0.0, times[j] - integrator.time()), dt);
    check_drift(integrator.norm_squared(), times[j]);
    for (std::size_t i = 0; i < sites.size(); ++i) grid.at(i, j) = integrator.at(sites[i]);
  }
  return grid;
}

}  // namespace qwalk
