#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qca::cli {

/// Exit codes of the qca tool.
enum ExitCode : int {
  ok = 0,
  io_or_parse = 1, ///< unreadable file, malformed JSON, bad command line
  math = 2,        ///< well-formed input for which the mathematics fails
  internal = 3,    ///< broken internal invariant (a bug)
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qca::cli
