#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rigidity::cli {

// Exit codes of the `rigidity` tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // verify-dft found a mismatch
  kUsage = 2,
  kNoCertificate = 3,
  kRefutationNotGuaranteed = 4,
  kInternal = 70,  // a soundness check tripped
};

// Runs one invocation; args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
