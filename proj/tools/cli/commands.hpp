// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "cli/run_config.hpp"

namespace qwalk::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

int cmd_walk(const RunConfig& config, std::ostream& out);
int cmd_truncation(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
/// Writes figure1_{none,left,dirichlet,periodic}.csv into the --out directory.
int cmd_figure1(const RunConfig& config, std::ostream& out);

/// Parses argv and dispatches; errors are reported on err and mapped to the
/// exit statuses above.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
