#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivagg {

/// Exit codes of the command-line tool.
enum ExitCode : int
{
  kExitOk             = 0,  ///< success, or an audit with zero failures
  kExitAxiomFailures  = 1,
  kExitInputError     = 2,  ///< unreadable input, bad flags, rule evaluation failures
  kExitRuleParameters = 3,  ///< rule parameters that do not fit n
};

/// Runs one command; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace ivagg
