// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) { return qwalk::cli::run_cli(argc, argv, std::cout, std::cerr); }
