#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symmoment::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,        ///< bad flags or a domain error
  kInconsistent = 3, ///< an identity failed to hold
  kCapacity = 4,     ///< a size cap was exceeded
};

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symmoment::cli
