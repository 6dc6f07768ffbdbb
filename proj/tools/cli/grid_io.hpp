// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qwalk/bounds.hpp"
#include "qwalk/types.hpp"

namespace qwalk::cli {

/// printf("%.15g") into a string.
std::string format_number(double value);

/// `# key=value` lines, then `x,t,re,im,prob`, one record per cell
/// (x-major, then t).
void write_csv(std::ostream& out, const AmplitudeGrid& grid, double epsilon);

/// Object with spec, method, epsilon, truncation (null unless a truncation
/// order applies), sites, times and data (one row of [re, im] pairs per site).
void write_json(std::ostream& out, const AmplitudeGrid& grid, double epsilon);

/// Inverse of write_json.
AmplitudeGrid read_json(std::istream& in);

/// Probability-only records `x,t,prob` for heat maps.
void write_probability_csv(std::ostream& out, const AmplitudeGrid& grid, double epsilon);

void write_plan_csv(std::ostream& out, const TruncationPlan& plan);
void write_plan_json(std::ostream& out, const TruncationPlan& plan);

}  // namespace qwalk::cli
