// SPDX-License-Identifier: Apache-2.0

#include "qwalk/types.hpp"

#include <cmath>
#include <sstream>

namespace qwalk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string cell_message(Site site, double time, const std::string& reason) {
  std::ostringstream os;
  os << "cell (x=" << site << ", t=" << time << "): " << reason;
  return os.str();
}

}  // namespace

std::string_view boundary_name(const BoundarySpec& boundary) {
  return std::visit(overloaded{
                        [](const Unbounded&) { return std::string_view("none"); },
                        [](const LeftWall&) { return std::string_view("left"); },
                        [](const Dirichlet&) { return std::string_view("dirichlet"); },
                        [](const Periodic&) { return std::string_view("periodic"); },
                    },
                    boundary);
}

std::optional<std::int64_t> lattice_length(const BoundarySpec& boundary) {
  if (const auto* d = std::get_if<Dirichlet>(&boundary)) return d->right - d->left;
  if (const auto* p = std::get_if<Periodic>(&boundary)) return p->right - p->left;
  return std::nullopt;
}

void WalkSpec::validate() const {
  if (!std::isfinite(q)) throw std::invalid_argument("q: must be finite");
  std::visit(overloaded{
                 [](const Unbounded&) {},
                 [this](const LeftWall& b) {
                   if (x0 <= b.left) throw std::invalid_argument("x0: must satisfy x0 > L for a left wall");
                 },
                 [this](const Dirichlet& b) {
                   if (b.right - b.left < 2)
                     throw std::invalid_argument("R: Dirichlet walk needs R - L >= 2");
                   if (x0 <= b.left || x0 >= b.right)
                     throw std::invalid_argument("x0: must satisfy L < x0 < R");
                 },
                 [this](const Periodic& b) {
                   if (b.right - b.left < 1) throw std::invalid_argument("R: periodic walk needs L < R");
                   if (x0 < b.left || x0 >= b.right)
                     throw std::invalid_argument("x0: must satisfy L <= x0 < R");
                 },
             },
             boundary);
}

bool is_lattice_site(const WalkSpec& spec, Site x) {
  return std::visit(overloaded{
                        [](const Unbounded&) { return true; },
                        [x](const LeftWall& b) { return x >= b.left; },
                        [x](const Dirichlet& b) { return x >= b.left && x <= b.right; },
                        [x](const Periodic& b) { return x >= b.left && x < b.right; },
                    },
                    spec.boundary);
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::series:
      return "series";
    case Method::spectral:
      return "spectral";
    case Method::ode:
      return "ode";
  }
  return "unknown";
}

OrderCapExceeded::OrderCapExceeded(int requested, int cap)
    : std::length_error("Bessel order " + std::to_string(requested) + " exceeds the order cap " +
                        std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

GridError::GridError(Site site, double time, const std::string& reason)
    : std::runtime_error(cell_message(site, time, reason)), site_(site), time_(time) {}

}  // namespace qwalk
