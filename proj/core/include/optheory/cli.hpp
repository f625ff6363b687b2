// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optheory {

/// Parses and executes one command-line invocation (without argv[0]).
/// Commands: validate, faithful, transpose, gns, cstar, born, calibrate,
/// export-theory. Returns the process exit code: 0 all checks passed,
/// 1 a check failed, 2 input/usage/schema error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace optheory
