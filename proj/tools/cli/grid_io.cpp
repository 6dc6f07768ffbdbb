// SPDX-License-Identifier: Apache-2.0

#include "cli/grid_io.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace qwalk::cli {

namespace {

using nlohmann::json;

void write_metadata(std::ostream& out, const AmplitudeGrid& grid, double epsilon) {
  const WalkSpec& spec = grid.spec;
  out << "# boundary=" << boundary_name(spec.boundary) << '\n';
  if (const auto* w = std::get_if<LeftWall>(&spec.boundary)) out << "# L=" << w->left << '\n';
  if (const auto* d = std::get_if<Dirichlet>(&spec.boundary)) out << "# L=" << d->left << "\n# R=" << d->right << '\n';
  if (const auto* p = std::get_if<Periodic>(&spec.boundary)) out << "# L=" << p->left << "\n# R=" << p->right << '\n';
  out << "# x0=" << spec.x0 << '\n';
  out << "# q=" << format_number(spec.q) << '\n';
  out << "# method=" << method_name(grid.method) << '\n';
  out << "# epsilon=" << format_number(epsilon) << '\n';
  if (grid.truncation_order) out << "# truncation_order=" << *grid.truncation_order << '\n';
}

json spec_to_json(const WalkSpec& spec) {
  json j;
  j["boundary"] = boundary_name(spec.boundary);
  if (const auto* w = std::get_if<LeftWall>(&spec.boundary)) j["L"] = w->left;
  if (const auto* d = std::get_if<Dirichlet>(&spec.boundary)) {
    j["L"] = d->left;
    j["R"] = d->right;
  }
  if (const auto* p = std::get_if<Periodic>(&spec.boundary)) {
    j["L"] = p->left;
    j["R"] = p->right;
  }
  j["x0"] = spec.x0;
  j["q"] = spec.q;
  return j;
}

WalkSpec spec_from_json(const json& j) {
  WalkSpec spec;
  const auto boundary = j.at("boundary").get<std::string>();
  if (boundary == "none") {
    spec.boundary = Unbounded{};
  } else if (boundary == "left") {
    spec.boundary = LeftWall{j.at("L").get<Site>()};
  } else if (boundary == "dirichlet") {
    spec.boundary = Dirichlet{j.at("L").get<Site>(), j.at("R").get<Site>()};
  } else if (boundary == "periodic") {
    spec.boundary = Periodic{j.at("L").get<Site>(), j.at("R").get<Site>()};
  } else {
    throw std::invalid_argument("boundary: unknown regime '" + boundary + "'");
  }
  spec.x0 = j.at("x0").get<Site>();
  spec.q = j.at("q").get<double>();
  return spec;
}

Method method_from_name(const std::string& name) {
  if (name == "series") return Method::series;
  if (name == "spectral") return Method::spectral;
  if (name == "ode") return Method::ode;
  throw std::invalid_argument("method: unknown '" + name + "'");
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  const int n = std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return std::string(buffer, static_cast<std::size_t>(n));
}

void write_csv(std::ostream& out, const AmplitudeGrid& grid, double epsilon) {
  write_metadata(out, grid, epsilon);
  out << "x,t,re,im,prob\n";
  for (std::size_t i = 0; i < grid.sites.size(); ++i) {
    for (std::size_t j = 0; j < grid.times.size(); ++j) {
      const Complex z = grid.at(i, j);
      out << grid.sites[i] << ',' << format_number(grid.times[j]) << ',' << format_number(z.real()) << ','
          << format_number(z.imag()) << ',' << format_number(std::norm(z)) << '\n';
    }
  }
}

void write_probability_csv(std::ostream& out, const AmplitudeGrid& grid, double epsilon) {
  write_metadata(out, grid, epsilon);
  out << "x,t,prob\n";
  for (std::size_t i = 0; i < grid.sites.size(); ++i)
    for (std::size_t j = 0; j < grid.times.size(); ++j)
      out << grid.sites[i] << ',' << format_number(grid.times[j]) << ',' << format_number(std::norm(grid.at(i, j)))
          << '\n';
}

void write_json(std::ostream& out, const AmplitudeGrid& grid, double epsilon) {
  json j;
  j["spec"] = spec_to_json(grid.spec);
  j["method"] = method_name(grid.method);
  j["epsilon"] = epsilon;
  if (grid.truncation_order) {
    j["truncation"] = {{"k", *grid.truncation_order}, {"epsilon", epsilon}};
  } else {
    j["truncation"] = nullptr;
  }
  j["sites"] = grid.sites;
  j["times"] = grid.times;
  json rows = json::array();
  for (std::size_t i = 0; i < grid.sites.size(); ++i) {
    json row = json::array();
    for (std::size_t jt = 0; jt < grid.times.size(); ++jt) row.push_back({grid.at(i, jt).real(), grid.at(i, jt).imag()});
    rows.push_back(std::move(row));
  }
  j["data"] = std::move(rows);
  out << j.dump() << '\n';
}

AmplitudeGrid read_json(std::istream& in) {
  const json j = json::parse(in);
  AmplitudeGrid grid;
  grid.spec = spec_from_json(j.at("spec"));
  grid.method = method_from_name(j.at("method").get<std::string>());
  if (!j.at("truncation").is_null()) grid.truncation_order = j.at("truncation").at("k").get<int>();
  grid.sites = j.at("sites").get<std::vector<Site>>();
  grid.times = j.at("times").get<std::vector<double>>();
  const json& rows = j.at("data");
  if (rows.size() != grid.sites.size()) throw std::invalid_argument("data: expected one row per site");
  grid.data.reserve(grid.sites.size() * grid.times.size());
  for (const json& row : rows) {
    if (row.size() != grid.times.size()) throw std::invalid_argument("data: expected one pair per time");
    for (const json& pair : row) grid.data.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  return grid;
}

void write_plan_csv(std::ostream& out, const TruncationPlan& plan) {
  out << "k,zeta,t_threshold,apriori_bound,fallback_used,epsilon,N,t\n";
  out << plan.k << ',' << format_number(plan.zeta) << ',' << format_number(plan.t_threshold) << ','
      << format_number(plan.apriori_bound) << ',' << (plan.fallback_used ? "true" : "false") << ','
      << format_number(plan.epsilon) << ',' << plan.N << ',' << format_number(plan.t) << '\n';
}

void write_plan_json(std::ostream& out, const TruncationPlan& plan) {
  const json j = {{"k", plan.k},
                  {"zeta", plan.zeta},
                  {"t_threshold", plan.t_threshold},
                  {"apriori_bound", plan.apriori_bound},
                  {"fallback_used", plan.fallback_used},
                  {"epsilon", plan.epsilon},
                  {"N", plan.N},
                  {"t", plan.t}};
  out << j.dump() << '\n';
}

}  // namespace qwalk::cli
