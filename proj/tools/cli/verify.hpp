// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/run_config.hpp"

namespace qwalk::cli {

struct PropertyResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs the invariant and cross-oracle checks. With no --boundary the four
/// regimes are checked at x0=13, L=0, R=30 together with the kernel, bound
/// and image checks; otherwise only the configured walk is checked.
std::vector<PropertyResult> run_verify(const RunConfig& config);

void write_report(std::ostream& out, const std::vector<PropertyResult>& results, Format format);

}  // namespace qwalk::cli
