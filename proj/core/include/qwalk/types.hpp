// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

/// Lattice site index.
using Site = std::int64_t;

// Boundary regimes. L and R are the wall (or identified) sites.
struct Unbounded {};

struct LeftWall {
  Site left = 0;
};

/// Walls at both ends: psi(L,t) = psi(R,t) = 0. Requires R - L >= 2.
struct Dirichlet {
  Site left = 0;
  Site right = 0;
};

/// Ring of N = R - L sites {L, ..., R-1}; site R is identified with L.
struct Periodic {
  Site left = 0;
  Site right = 0;
};

using BoundarySpec = std::variant<Unbounded, LeftWall, Dirichlet, Periodic>;

/// Name used by the CLI and the output formats: none, left, dirichlet, periodic.
std::string_view boundary_name(const BoundarySpec& boundary);

/// Lattice length N = R - L for two-sided regimes, nullopt otherwise.
std::optional<std::int64_t> lattice_length(const BoundarySpec& boundary);

/// A walk started in |x0> on a lattice with on-site potential q.
struct WalkSpec {
  BoundarySpec boundary;
  double q = 0.0;
  Site x0 = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// True if x is a state-space site of the spec (walls included for
/// Dirichlet and left-wall walks, site R excluded for periodic walks).
bool is_lattice_site(const WalkSpec& spec, Site x);

enum class Method { series, spectral, ode };

std::string_view method_name(Method method);

/// Amplitudes over sites x times, stored site-major.
struct AmplitudeGrid {
  WalkSpec spec;
  std::vector<Site> sites;
  std::vector<double> times;
  std::vector<Complex> data;
  Method method = Method::series;
  std::optional<int> truncation_order;

  Complex& at(std::size_t site_index, std::size_t time_index) {
    return data[site_index * times.size() + time_index];
  }
  const Complex& at(std::size_t site_index, std::size_t time_index) const {
    return data[site_index * times.size() + time_index];
  }
};

/// A requested Bessel order exceeded the configured cap.
class OrderCapExceeded : public std::length_error {
 public:
  OrderCapExceeded(int requested, int cap);

  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

/// The numerical integrator lost unitarity beyond its tolerance.
class IntegratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation of one grid cell failed; carries the cell coordinates.
class GridError : public std::runtime_error {
 public:
  GridError(Site site, double time, const std::string& reason);

  Site site() const noexcept { return site_; }
  double time() const noexcept { return time_; }

 private:
  Site site_;
  double time_;
};

}  // namespace qwalk
