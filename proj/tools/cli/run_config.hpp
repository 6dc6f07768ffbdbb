// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk::cli {

enum class Subcommand { walk, truncation, verify, figure1 };
enum class Format { csv, json };

struct RunConfig {
  Subcommand subcommand = Subcommand::walk;
  std::optional<std::string> boundary;
  std::optional<Site> L;
  std::optional<Site> R;
  std::optional<Site> x0;
  double q = 0.0;
  std::optional<double> t;
  std::optional<double> t_max;
  std::optional<int> t_steps;
  double epsilon = 1e-5;
  Method method = Method::series;
  Format format = Format::csv;
  std::optional<std::string> out;
  std::optional<Site> x_min;
  std::optional<Site> x_max;
  double dt = 1e-3;
  bool inject_fault = false;
};

/// Invalid configuration; field() is the flag (without dashes) at fault.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Builds the walk described by the boundary flags. x0 falls back to
/// default_x0 when the flag is absent.
WalkSpec make_spec(const RunConfig& config, Site default_x0 = 0);

void check_epsilon(const RunConfig& config);

/// Either the single --t or t_max * j / t_steps for j = 0..t_steps.
std::vector<double> make_times(const RunConfig& config);

/// Half-width of the site window that holds the probability of an open walk
/// up to time t.
Site light_cone_width(double t);

/// Default sites for a walk (whole lattice for two-sided walks, the light
/// cone for open ones), narrowed by --x-min / --x-max.
std::vector<Site> make_sites(const RunConfig& config, const WalkSpec& spec, double t_max);

/// Bessel order cap, from QWALK_MAX_ORDER when set.
int order_cap_from_env();

}  // namespace qwalk::cli
