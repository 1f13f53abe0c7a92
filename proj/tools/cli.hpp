#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hjx::cli {

enum ExitCode : int {
  kFound = 0,          // found / verified
  kNone = 1,           // nothing found / refuted
  kResourceLimit = 2,
  kUsage = 3,
};

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hjx::cli
