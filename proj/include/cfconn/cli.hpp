#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfconn::cli {

/// Process exit statuses. Stable: scripts and tests depend on them.
enum ExitCode : int {
  kPass = 0,
  kVerifyFail = 1,
  kParseError = 2,
  kDisconnected = 3,
  kCapExceeded = 4,
  kViolation = 5,
};

/// Runs the cfconnect command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfconn::cli
