// SPDX-License-Identifier: Apache-2.0

#include "cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "qwalk/bessel.hpp"

namespace qwalk::cli {

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

namespace {

Site require(const std::optional<Site>& value, const char* field, const std::string& boundary) {
  if (!value) throw ConfigError(field, "required for --boundary " + boundary);
  return *value;
}

void forbid(const std::optional<Site>& value, const char* field, const std::string& boundary) {
  if (value) throw ConfigError(field, "not allowed with --boundary " + boundary);
}

}  // namespace

WalkSpec make_spec(const RunConfig& config, Site default_x0) {
  const std::string boundary = config.boundary.value_or("none");
  WalkSpec spec;
  spec.q = config.q;
  spec.x0 = config.x0.value_or(default_x0);
  if (boundary == "none") {
    forbid(config.L, "L", boundary);
    forbid(config.R, "R", boundary);
    spec.boundary = Unbounded{};
  } else if (boundary == "left") {
    forbid(config.R, "R", boundary);
    spec.boundary = LeftWall{require(config.L, "L", boundary)};
  } else if (boundary == "dirichlet") {
    spec.boundary = Dirichlet{require(config.L, "L", boundary), require(config.R, "R", boundary)};
  } else if (boundary == "periodic") {
    spec.boundary = Periodic{require(config.L, "L", boundary), require(config.R, "R", boundary)};
  } else {
    throw ConfigError("boundary", "unknown regime '" + boundary + "'");
  }

  try {
    spec.validate();
  } catch (const std::invalid_argument& err) {
    const std::string what = err.what();
    const auto colon = what.find(':');
    if (colon == std::string::npos) throw ConfigError("boundary", what);
    throw ConfigError(what.substr(0, colon), what.substr(std::min(what.size(), colon + 2)));
  }
  return spec;
}

void check_epsilon(const RunConfig& config) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) throw ConfigError("epsilon", "must lie in (0, 1)");
}

std::vector<double> make_times(const RunConfig& config) {
  if (config.t && config.t_max) throw ConfigError("t", "give either --t or --t-max, not both");
  if (config.t) {
    if (!std::isfinite(*config.t) || *config.t < 0.0) throw ConfigError("t", "must be finite and non-negative");
    return {*config.t};
  }
  if (!config.t_max) throw ConfigError("t", "one of --t or --t-max is required");
  if (!std::isfinite(*config.t_max) || *config.t_max < 0.0)
    throw ConfigError("t-max", "must be finite and non-negative");
  if (!config.t_steps) throw ConfigError("t-steps", "required with --t-max");
  if (*config.t_steps < 1) throw ConfigError("t-steps", "must be at least 1");

  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(*config.t_steps) + 1);
  for (int j = 0; j <= *config.t_steps; ++j) times.push_back(*config.t_max * j / *config.t_steps);
  return times;
}

Site light_cone_width(double t) {
  if (t <= 0.0) return 0;
  return static_cast<Site>(std::ceil(2.0 * t + 10.0 * std::cbrt(t)));
}

std::vector<Site> make_sites(const RunConfig& config, const WalkSpec& spec, double t_max) {
  Site lo = 0;
  Site hi = 0;
  const Site w = light_cone_width(t_max);
  if (const auto* d = std::get_if<Dirichlet>(&spec.boundary)) {
    lo = d->left;
    hi = d->right;
  } else if (const auto* p = std::get_if<Periodic>(&spec.boundary)) {
    lo = p->left;
    hi = p->right - 1;
  } else if (const auto* l = std::get_if<LeftWall>(&spec.boundary)) {
    lo = l->left;
    hi = spec.x0 + w;
  } else {
    lo = spec.x0 - w;
    hi = spec.x0 + w;
  }
  if (config.x_min) {
    if (!is_lattice_site(spec, *config.x_min)) throw ConfigError("x-min", "outside the lattice");
    lo = *config.x_min;
  }
  if (config.x_max) {
    if (!is_lattice_site(spec, *config.x_max)) throw ConfigError("x-max", "outside the lattice");
    hi = *config.x_max;
  }
  if (lo > hi) throw ConfigError("x-max", "must not be below --x-min");

  std::vector<Site> sites;
  sites.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Site x = lo; x <= hi; ++x) sites.push_back(x);
  return sites;
}

int order_cap_from_env() {
  const char* raw = std::getenv("QWALK_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return kDefaultOrderCap;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 1)
    throw ConfigError("QWALK_MAX_ORDER", "must be a positive integer");
  return value;
}

}  // namespace qwalk::cli
