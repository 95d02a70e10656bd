#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewswitch::cli {

// Process exit codes. Scripts branch on the mathematical verdict, so "no"
// is distinct from every failure.
enum ExitCode : int {
  kYes = 0,
  kMismatch = 1,  // tables --check found a difference, or an internal error
  kUsage = 2,     // bad flags, unreadable or invalid input
  kResource = 3,  // an enumeration guard was exceeded
  kNo = 10,
};

// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewswitch::cli
