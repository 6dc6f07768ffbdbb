// SPDX-License-Identifier: Apache-2.0

#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "cli/grid_io.hpp"
#include "json.hpp"
#include "qwalk/bessel.hpp"
#include "qwalk/bounds.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

constexpr double kSpectralUnitarity = 1e-10;
constexpr double kOpenUnitarity = 1e-10;
constexpr double kOdeAgreement = 1e-7;
constexpr double kIntegralOracle = 1e-9;
constexpr double kHansenSum = 1e-12;

struct Report {
  std::vector<PropertyResult> results;

  void add(std::string name, double measured, double tolerance) {
    const bool pass = std::isfinite(measured) && measured <= tolerance;
    results.push_back({std::move(name), measured, tolerance, pass});
  }
};

std::vector<Site> range(Site lo, Site hi) {
  std::vector<Site> sites;
  for (Site x = lo; x <= hi; ++x) sites.push_back(x);
  return sites;
}

// Sites that carry the whole state: the lattice, or a window of 2t + 40
// around the start for open walks.
std::vector<Site> support(const WalkSpec& spec, double t_max) {
  const Site w = static_cast<Site>(std::ceil(2.0 * t_max)) + 40;
  if (const auto* d = std::get_if<Dirichlet>(&spec.boundary)) return range(d->left, d->right);
  if (const auto* p = std::get_if<Periodic>(&spec.boundary)) return range(p->left, p->right - 1);
  if (const auto* l = std::get_if<LeftWall>(&spec.boundary)) return range(l->left, spec.x0 + w);
  return range(spec.x0 - w, spec.x0 + w);
}

double max_deviation(const AmplitudeGrid& a, const AmplitudeGrid& b) {
  double worst = 0.0;
  for (std::size_t n = 0; n < a.data.size(); ++n) worst = std::max(worst, std::abs(a.data[n] - b.data[n]));
  return worst;
}

double unitarity_defect(const AmplitudeGrid& grid) {
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.times.size(); ++j) {
    double total = 0.0;
    for (std::size_t i = 0; i < grid.sites.size(); ++i) total += std::norm(grid.at(i, j));
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

void check_walk(Report& report, const WalkSpec& spec, const std::vector<double>& times, const RunConfig& config,
                const SeriesOptions& options) {
  const std::string prefix(boundary_name(spec.boundary));
  const double eps = config.epsilon;
  const double t_max = *std::max_element(times.begin(), times.end());
  const auto sites = support(spec, t_max);

  const double zero[] = {0.0};
  const auto start = evaluate_grid(spec, sites, zero, eps, options);
  double start_defect = 0.0;
  for (std::size_t i = 0; i < sites.size(); ++i)
    start_defect = std::max(start_defect, std::abs(start.at(i, 0) - Complex(sites[i] == spec.x0 ? 1.0 : 0.0, 0.0)));
  report.add(prefix + ".initial_state", start_defect, 0.0);

  const auto series = evaluate_grid(spec, sites, times, eps, options);
  const auto length = lattice_length(spec.boundary);
  report.add(prefix + ".unitarity", unitarity_defect(series), length ? 10.0 * eps : kOpenUnitarity);

  if (length) {
    const auto spectral = spectral_grid(spec, sites, times);
    report.add(prefix + ".spectral_unitarity", unitarity_defect(spectral), kSpectralUnitarity);
    report.add(prefix + ".oracle_equivalence", max_deviation(series, spectral), eps);

    const int N = static_cast<int>(*length);
    const int k = series.truncation_order.value_or(1);
    if (const auto* d = std::get_if<Dirichlet>(&spec.boundary)) {
      // Largest wall amplitude relative to the tail bound at the same time.
      double ratio = 0.0;
      for (std::size_t j = 0; j < times.size(); ++j) {
        const double wall = std::max(std::abs(series.at(0, j)), std::abs(series.at(sites.size() - 1, j)));
        ratio = std::max(ratio, wall / apriori_error_bound(k, times[j], N));
      }
      report.add(prefix + ".wall_condition", ratio, 1.0);
      if (N == 2) {
        double phase = 0.0;
        for (std::size_t j = 0; j < times.size(); ++j)
          phase = std::max(phase, std::abs(series.at(static_cast<std::size_t>(spec.x0 - d->left), j) -
                                           std::polar(1.0, -spec.q * times[j])));
        report.add(prefix + ".single_mode_phase", phase, eps);
      }
    } else {
      const auto& p = std::get<Periodic>(spec.boundary);
      double gap = 0.0;
      for (double t : times)
        gap = std::max(gap, std::abs(amplitude_periodic(spec, p.left, t, k, options) -
                                     amplitude_periodic(spec, p.right, t, k, options)));
      report.add(prefix + ".identification", gap, 2.0 * eps);
    }
  }

  const auto ode = ode_grid(spec, sites, times, config.dt);
  report.add(prefix + ".ode_agreement", max_deviation(series, ode), kOdeAgreement);
}

void check_kernel(Report& report) {
  double worst = 0.0;
  for (int n : {0, 1, 2, 5, 10, 20, 35, 50})
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 35.0, 50.0})
      worst = std::max(worst, std::abs(bessel_j(n, x) - bessel_j_integral_oracle(n, x)));
  report.add("bessel.integral_oracle", worst, kIntegralOracle);

  double hansen = 0.0;
  for (double x : {0.5, 5.0, 50.0, 200.0}) {
    const auto batch = bessel_j_batch(x, static_cast<int>(std::ceil(x)) + 60);
    double sum = batch[0] * batch[0];
    for (int n = 1; n <= batch.max_order; ++n) sum += 2.0 * batch[n] * batch[n];
    hansen = std::max(hansen, std::abs(sum - 1.0));
  }
  report.add("bessel.hansen_sum", hansen, kHansenSum);

  // Largest ratio |J_n(2t)| / (t^n / n!).
  double ratio = 0.0;
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const auto batch = bessel_j_batch(2.0 * t, 60);
    for (int n = 0; n <= 60; ++n) {
      const double log_bound = n * std::log(t) - std::lgamma(n + 1.0);
      if (batch[n] != 0.0) ratio = std::max(ratio, std::exp(std::log(std::abs(batch[n])) - log_bound));
    }
  }
  report.add("bessel.power_bound", ratio, 1.0);
}

void check_bounds(Report& report) {
  report.add("bounds.figure1_order", std::abs(truncation_k(60.0, 1e-5, 30).k - 12), 0.0);

  double ratio = 0.0;
  for (int N : {2, 8, 16, 30})
    for (double t : {0.5, 5.0, 30.0, 60.0}) {
      const int k0 = static_cast<int>(std::floor(t * std::exp(1.0) / N)) + 1;
      for (int k = k0; k < k0 + 10; ++k) {
        const double bound = apriori_error_bound(k, t, N);
        if (bound > 1e-290) ratio = std::max(ratio, factorial_tail_bound(k, t, N, 20) / bound);
      }
    }
  report.add("bounds.tail_dominance", ratio, 1.0);
}

void check_images(Report& report) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Site> left(-1000, 1000);
  std::uniform_int_distribution<Site> width(2, 200);
  std::uniform_int_distribution<std::int64_t> order(-100, 100);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Site L = left(rng);
    const Site R = L + width(rng);
    const Site x0 = std::uniform_int_distribution<Site>(L + 1, R - 1)(rng);
    const std::int64_t n = order(rng);
    const std::int64_t m = n >= 0 ? n / 2 : -((-n + 1) / 2);
    const Site closed = (n - 2 * m == 0) ? x0 + 2 * m * (R - L) : 2 * R - x0 + 2 * m * (R - L);
    if (mirror_points(L, R, x0, n) != closed) ++mismatches;
  }
  report.add("images.closed_form", mismatches, 0.0);
}

}  // namespace

std::vector<PropertyResult> run_verify(const RunConfig& config) {
  check_epsilon(config);
  if (!(config.dt > 0.0 && config.dt <= 0.01)) throw ConfigError("dt", "must lie in (0, 0.01]");

  std::vector<double> times;
  if (config.t || config.t_max) {
    for (double t : make_times(config))
      if (t > 0.0) times.push_back(t);
    if (times.empty()) throw ConfigError("t", "verify needs a positive time");
  } else {
    times = {2.0, 5.0, 10.0, 20.0};
  }

  SeriesOptions options;
  options.order_cap = order_cap_from_env();
  if (config.inject_fault)
    options.batch_hook = [](BesselBatch& batch) {
      if (!batch.values.empty()) batch.values[0] *= 1.0 + 1e-3;
    };

  Report report;
  if (config.boundary) {
    check_walk(report, make_spec(config), times, config, options);
  } else {
    if (config.L || config.R || config.x0) throw ConfigError("boundary", "required when --L, --R or --x0 is given");
    const Site x0 = 13;
    for (const BoundarySpec& b : {BoundarySpec{Unbounded{}}, BoundarySpec{LeftWall{0}}, BoundarySpec{Dirichlet{0, 30}},
                                  BoundarySpec{Periodic{0, 30}}})
      check_walk(report, WalkSpec{b, config.q, x0}, times, config, options);
    check_kernel(report);
    check_bounds(report);
    check_images(report);
  }
  return std::move(report.results);
}

void write_report(std::ostream& out, const std::vector<PropertyResult>& results, Format format) {
  if (format == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results)
      rows.push_back({{"property", r.name}, {"measured", r.measured}, {"tolerance", r.tolerance}, {"pass", r.pass}});
    out << rows.dump() << '\n';
    return;
  }
  out << "property,measured,tolerance,status\n";
  for (const auto& r : results)
    out << r.name << ',' << format_number(r.measured) << ',' << format_number(r.tolerance) << ','
        << (r.pass ? "PASS" : "FAIL") << '\n';
}

}  // namespace qwalk::cli
