// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "cli/grid_io.hpp"
#include "cli/verify.hpp"
#include "qwalk/bounds.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

namespace {

// Runs emit against --out when given, otherwise against out.
template <class Emit>
void emit_to(const std::optional<std::string>& path, std::ostream& out, Emit&& emit) {
  if (!path) {
    emit(out);
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw ConfigError("out", "cannot open '" + *path + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw ConfigError("out", "write to '" + *path + "' failed");
}

SeriesOptions series_options() {
  SeriesOptions options;
  options.order_cap = order_cap_from_env();
  return options;
}

void check_dt(double dt) {
  if (!(dt > 0.0 && dt <= 0.01)) throw ConfigError("dt", "must lie in (0, 0.01]");
}

}  // namespace

int cmd_walk(const RunConfig& config, std::ostream& out) {
  const WalkSpec spec = make_spec(config);
  check_epsilon(config);
  const auto times = make_times(config);
  const auto sites = make_sites(config, spec, *std::max_element(times.begin(), times.end()));

  AmplitudeGrid grid;
  switch (config.method) {
    case Method::series:
      grid = evaluate_grid(spec, sites, times, config.epsilon, series_options());
      break;
    case Method::spectral:
      if (!lattice_length(spec.boundary)) throw ConfigError("method", "spectral needs --boundary dirichlet or periodic");
      grid = spectral_grid(spec, sites, times);
      break;
    case Method::ode:
      check_dt(config.dt);
      grid = ode_grid(spec, sites, times, config.dt);
      break;
  }

  emit_to(config.out, out, [&](std::ostream& os) {
    if (config.format == Format::json) {
      write_json(os, grid, config.epsilon);
    } else {
      write_csv(os, grid, config.epsilon);
    }
  });
  return kExitOk;
}

int cmd_truncation(const RunConfig& config, std::ostream& out) {
  const std::string boundary = config.boundary.value_or("none");
  if (boundary != "dirichlet" && boundary != "periodic")
    throw ConfigError("boundary", "truncation needs --boundary dirichlet or periodic");
  const WalkSpec spec = make_spec(config, config.L.value_or(0) + 1);
  check_epsilon(config);
  if (config.t && config.t_max) throw ConfigError("t", "give either --t or --t-max, not both");
  const double t = config.t ? *config.t : config.t_max.value_or(0.0);
  if (!config.t && !config.t_max) throw ConfigError("t", "one of --t or --t-max is required");
  if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("t", "must be positive and finite");

  const auto plan = truncation_k(t, config.epsilon, static_cast<int>(*lattice_length(spec.boundary)));
  emit_to(config.out, out, [&](std::ostream& os) {
    if (config.format == Format::json) {
      write_plan_json(os, plan);
    } else {
      write_plan_csv(os, plan);
    }
  });
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto results = run_verify(config);
  emit_to(config.out, out, [&](std::ostream& os) { write_report(os, results, config.format); });
  const bool ok = std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.pass; });
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_figure1(const RunConfig& config, std::ostream& out) {
  if (config.boundary) throw ConfigError("boundary", "figure1 writes all four regimes");
  RunConfig panel = config;
  panel.L = config.L.value_or(0);
  panel.R = config.R.value_or(30);
  panel.x0 = config.x0.value_or(13);
  if (!panel.t && !panel.t_max) {
    panel.t_max = 60.0;
    panel.t_steps = config.t_steps.value_or(240);
  }
  check_epsilon(panel);
  const auto times = make_times(panel);
  const double t_max = *std::max_element(times.begin(), times.end());

  const std::filesystem::path dir = config.out.value_or(".");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("out", "cannot create directory '" + dir.string() + "'");

  for (const char* name : {"none", "left", "dirichlet", "periodic"}) {
    RunConfig c = panel;
    c.boundary = name;
    if (c.boundary == "none") c.L.reset();
    if (c.boundary == "none" || c.boundary == "left") c.R.reset();
    const WalkSpec spec = make_spec(c);
    const auto sites = make_sites(c, spec, t_max);
    const auto grid = evaluate_grid(spec, sites, times, c.epsilon, series_options());

    const auto path = dir / ("figure1_" + std::string(name) + ".csv");
    emit_to(path.string(), out, [&](std::ostream& os) { write_probability_csv(os, grid, c.epsilon); });
    out << path.string();
    if (grid.truncation_order) out << " k=" << *grid.truncation_order;
    out << '\n';
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-time quantum walks on one-dimensional lattices", "qwalk"};
  app.require_subcommand(1);

  RunConfig config;
  std::string method = "series";
  std::string format = "csv";

  const auto add_walk_flags = [&](CLI::App* sub) {
    sub->add_option("--boundary", config.boundary, "Boundary regime")
        ->check(CLI::IsMember({"none", "left", "dirichlet", "periodic"}));
    sub->add_option("--L", config.L, "Left wall site");
    sub->add_option("--R", config.R, "Right wall site");
    sub->add_option("--x0", config.x0, "Start site");
    sub->add_option("--q", config.q, "On-site potential");
  };
  const auto add_time_flags = [&](CLI::App* sub) {
    sub->add_option("--t", config.t, "Single evaluation time");
    sub->add_option("--t-max", config.t_max, "Last time of an evenly spaced sweep starting at 0");
    sub->add_option("--t-steps", config.t_steps, "Number of intervals in the sweep");
    sub->add_option("--epsilon", config.epsilon, "Target accuracy of the truncated series")->capture_default_str();
  };
  const auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", config.out, "Output path (stdout when omitted)");
  };

  auto* walk = app.add_subcommand("walk", "Evaluate amplitudes on a site x time grid");
  add_walk_flags(walk);
  add_time_flags(walk);
  add_output_flags(walk);
  walk->add_option("--method", method, "Evaluator")
      ->check(CLI::IsMember({"series", "spectral", "ode"}))
      ->capture_default_str();
  walk->add_option("--x-min", config.x_min, "First site of the output window");
  walk->add_option("--x-max", config.x_max, "Last site of the output window");
  walk->add_option("--dt", config.dt, "Step of the ode method")->capture_default_str();

  auto* truncation = app.add_subcommand("truncation", "Report the truncation order for a two-sided walk");
  add_walk_flags(truncation);
  add_time_flags(truncation);
  add_output_flags(truncation);

  auto* verify = app.add_subcommand("verify", "Run the invariant and cross-oracle checks");
  add_walk_flags(verify);
  add_time_flags(verify);
  add_output_flags(verify);
  verify->add_option("--dt", config.dt, "Step of the ode oracle")->capture_default_str();
  verify->add_flag("--inject-fault", config.inject_fault, "Scale J_0 by 1+1e-3 in every series evaluation");

  auto* figure1 = app.add_subcommand("figure1", "Write probability grids for the four regimes");
  figure1->add_option("--boundary", config.boundary, "Not accepted; all four regimes are written");
  figure1->add_option("--L", config.L, "Left wall site")->default_str("0");
  figure1->add_option("--R", config.R, "Right wall site")->default_str("30");
  figure1->add_option("--x0", config.x0, "Start site")->default_str("13");
  figure1->add_option("--q", config.q, "On-site potential");
  add_time_flags(figure1);
  figure1->add_option("--x-min", config.x_min, "First site of every panel");
  figure1->add_option("--x-max", config.x_max, "Last site of every panel");
  figure1->add_option("--out", config.out, "Output directory")->default_str(".");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  config.method = method == "spectral" ? Method::spectral : method == "ode" ? Method::ode : Method::series;
  config.format = format == "json" ? Format::json : Format::csv;

  try {
    if (*walk) {
      config.subcommand = Subcommand::walk;
      return cmd_walk(config, out);
    }
    if (*truncation) {
      config.subcommand = Subcommand::truncation;
      return cmd_truncation(config, out);
    }
    if (*verify) {
      config.subcommand = Subcommand::verify;
      return cmd_verify(config, out);
    }
    config.subcommand = Subcommand::figure1;
    return cmd_figure1(config, out);
  } catch (const ConfigError& e) {
    err << "qwalk: error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GridError& e) {
    err << "qwalk: numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const IntegratorError& e) {
    err << "qwalk: numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const OrderCapExceeded& e) {
    err << "qwalk: numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "qwalk: error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "qwalk: error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "qwalk: numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace qwalk::cli
