#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace creg::cli {

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kContradiction = 3 };

/// Runs one invocation; args excludes the program name. The session is read
/// from --session FILE, or from `in` when a command needs one and none is
/// given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace creg::cli
