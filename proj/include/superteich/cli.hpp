#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superteich {

// Exit statuses of the command-line front end.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParseError = 2,
  kExitPrecondition = 3,
};

// Runs one command. args excludes the program name, e.g.
// {"check", "ptolemy", "graph.fg", "--mode", "rational"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superteich
