#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgraph::cli {

enum ExitCode : int { holds = 0, fails = 1, inconclusive = 2, invalid_input = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; "-" as the file argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kgraph::cli
