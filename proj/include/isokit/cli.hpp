#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isokit {

/// Runs the command-line front end on `args` (not including the program
/// name). Exit codes: 0 success / no violations, 1 violations found,
/// 2 usage or validation error, 3 proof invariant violated.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isokit
