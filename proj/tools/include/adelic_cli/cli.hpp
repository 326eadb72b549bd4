#pragma once

#include <ostream>

namespace adelic::cli {

enum ExitCode : int {
  kOk = 0,
  kGoldenFailure = 1,  // --corpus found a mismatch
  kUsage = 2,          // bad flags or unparsable input
  kUndetermined = 3,
  kPrecondition = 4,   // cap exceeded or precondition violated
  kIo = 5,
};

// Entry point of the adelic driver with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace adelic::cli
