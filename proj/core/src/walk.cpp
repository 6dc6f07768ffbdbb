// SPDX-License-Identifier: Apache-2.0

#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qwalk/bounds.hpp"

namespace qwalk {

namespace {

// One free-walk source of the image superposition.
struct Image {
  Site point;
  int sign;
};

template <class Boundary>
const Boundary& expect(const WalkSpec& spec, const char* what) {
  const auto* b = std::get_if<Boundary>(&spec.boundary);
  if (b == nullptr) throw std::invalid_argument(std::string(what) + " needs a matching boundary spec");
  return *b;
}

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw std::domain_error("t must be finite and non-negative");
}

void check_k(int k) {
  if (k < 1) throw std::domain_error("truncation order k must be at least 1");
}

std::vector<Image> images_for(const WalkSpec& spec, int k) {
  std::vector<Image> images;
  if (std::holds_alternative<Unbounded>(spec.boundary)) {
    images.push_back({spec.x0, 1});
  } else if (const auto* w = std::get_if<LeftWall>(&spec.boundary)) {
    images.push_back({spec.x0, 1});
    images.push_back({2 * w->left - spec.x0, -1});
  } else if (const auto* d = std::get_if<Dirichlet>(&spec.boundary)) {
    const auto points = mirror_image_set(d->left, d->right, spec.x0, k);
    images.reserve(points.size());
    for (int n = -k; n <= k; ++n) images.push_back({points[static_cast<std::size_t>(n + k)], n % 2 == 0 ? 1 : -1});
  } else {
    const auto& p = std::get<Periodic>(spec.boundary);
    images.reserve(2 * static_cast<std::size_t>(k) + 1);
    for (int n = -k; n <= k; ++n) images.push_back({periodic_points(p.left, p.right, spec.x0, n), 1});
  }
  return images;
}

std::int64_t max_order(std::span<const Image> images, std::span<const Site> sites) {
  std::int64_t top = 0;
  for (Site x : sites)
    for (const Image& img : images) top = std::max<std::int64_t>(top, std::abs(x - img.point));
  return top;
}

BesselBatch batch_for(double t, std::int64_t n_max, const SeriesOptions& options) {
  if (n_max > options.order_cap) throw OrderCapExceeded(static_cast<int>(std::min<std::int64_t>(n_max, std::numeric_limits<int>::max())), options.order_cap);
  BesselBatch batch = bessel_j_batch(2.0 * t, static_cast<int>(n_max), options.order_cap);
  if (options.batch_hook) options.batch_hook(batch);
  return batch;
}

// Images sharing an order are combined with integer weights first, so pairs
// that cancel analytically (e.g. at a Dirichlet wall) cancel exactly.
Complex superpose(std::span<const Image> images, Site x, const BesselBatch& batch) {
  std::vector<std::pair<int, int>> terms;
  terms.reserve(images.size());
  for (const Image& img : images) terms.emplace_back(static_cast<int>(std::abs(x - img.point)), img.sign);
  std::sort(terms.begin(), terms.end());

  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < terms.size();) {
    const int order = terms[i].first;
    int weight = 0;
    for (; i < terms.size() && terms[i].first == order; ++i) weight += terms[i].second;
    if (weight != 0) sum += static_cast<double>(weight) * i_power(order) * batch[order];
  }
  return sum;
}

Complex phase(double t, double q) { return std::polar(1.0, -t * q); }

Complex evaluate_point(const WalkSpec& spec, Site x, double t, int k, const SeriesOptions& options) {
  if (t == 0.0) return x == spec.x0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  const auto images = images_for(spec, k);
  const Site one[] = {x};
  const BesselBatch batch = batch_for(t, max_order(images, one), options);
  return phase(t, spec.q) * superpose(images, x, batch);
}

}  // namespace

Complex amplitude_unbounded(const WalkSpec& spec, Site x, double t, const SeriesOptions& options) {
  expect<Unbounded>(spec, "amplitude_unbounded");
  check_time(t);
  return evaluate_point(spec, x, t, 1, options);
}

Complex amplitude_left_wall(const WalkSpec& spec, Site x, double t, const SeriesOptions& options) {
  const auto& wall = expect<LeftWall>(spec, "amplitude_left_wall");
  check_time(t);
  if (x < wall.left) throw std::domain_error("site lies left of the wall");
  return evaluate_point(spec, x, t, 1, options);
}

Site mirror_points(Site L, Site R, Site x0, std::int64_t n) {
  // Follow the recursion down to x_0, remembering which wall each level
  // reflects about, then unwind.
  std::vector<Site> walls;
  walls.reserve(static_cast<std::size_t>(n < 0 ? -n : n));
  while (n != 0) {
    if (n > 0) {
      walls.push_back(R);
      n = -n + 1;
    } else {
      walls.push_back(L);
      n = -n - 1;
    }
  }
  Site value = x0;
  for (auto it = walls.rbegin(); it != walls.rend(); ++it) value = 2 * *it - value;
  return value;
}

std::vector<Site> mirror_image_set(Site L, Site R, Site x0, int k) {
  if (k < 0) throw std::domain_error("image count must be non-negative");
  std::vector<Site> points(2 * static_cast<std::size_t>(k) + 1);
  auto at = [&](int n) -> Site& { return points[static_cast<std::size_t>(n + k)]; };
  at(0) = x0;
  for (int m = 1; m <= k; ++m) {
    at(-m) = 2 * L - at(m - 1);
    at(m) = 2 * R - at(-m + 1);
  }
  return points;
}

Site periodic_points(Site L, Site R, Site x0, std::int64_t n) { return n * (R - L) + x0; }

Complex amplitude_dirichlet(const WalkSpec& spec, Site x, double t, int k, const SeriesOptions& options) {
  const auto& walls = expect<Dirichlet>(spec, "amplitude_dirichlet");
  check_time(t);
  check_k(k);
  if (x < walls.left || x > walls.right) throw std::domain_error("site lies outside [L, R]");
  return evaluate_point(spec, x, t, k, options);
}

Complex amplitude_periodic(const WalkSpec& spec, Site x, double t, int k, const SeriesOptions& options) {
  const auto& ring = expect<Periodic>(spec, "amplitude_periodic");
  check_time(t);
  check_k(k);
  if (x < ring.left || x > ring.right) throw std::domain_error("site lies outside [L, R]");
  if (t == 0.0 && x == ring.right) return ring.left == spec.x0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  return evaluate_point(spec, x, t, k, options);
}

AmplitudeGrid evaluate_grid(const WalkSpec& spec, std::span<const Site> sites, std::span<const double> times,
                            double epsilon, const SeriesOptions& options) {
  spec.validate();
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("epsilon must lie in (0, 1)");
  for (double t : times) check_time(t);
  for (Site x : sites)
    if (!is_lattice_site(spec, x))
      throw std::domain_error("site " + std::to_string(x) + " is outside the lattice of a " +
                              std::string(boundary_name(spec.boundary)) + " walk");

  AmplitudeGrid grid;
  grid.spec = spec;
  grid.sites.assign(sites.begin(), sites.end());
  grid.times.assign(times.begin(), times.end());
  grid.data.assign(sites.size() * times.size(), Complex{0.0, 0.0});
  grid.method = Method::series;

  int k = 1;
  if (const auto length = lattice_length(spec.boundary)) {
    const int N = static_cast<int>(*length);
    for (double t : times)
      if (t > 0.0) k = std::max(k, truncation_k(t, epsilon, N).k);
    grid.truncation_order = k;
  }
  const auto images = images_for(spec, k);
  const std::int64_t n_max = max_order(images, sites);

  for (std::size_t j = 0; j < times.size(); ++j) {
    const double t = times[j];
    if (t == 0.0) {
      for (std::size_t i = 0; i < sites.size(); ++i)
        if (sites[i] == spec.x0) grid.at(i, j) = 1.0;
      continue;
    }
    BesselBatch batch;
    try {
      batch = batch_for(t, n_max, options);
    } catch (const std::exception& err) {
      throw GridError(sites.empty() ? spec.x0 : sites.front(), t, err.what());
    }
    const Complex prefactor = phase(t, spec.q);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      const Complex value = prefactor * superpose(images, sites[i], batch);
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw GridError(sites[i], t, "non-finite amplitude");
      grid.at(i, j) = value;
    }
  }
  return grid;
}

}  // namespace qwalk
