#pragma once

#include <ostream>

namespace robin::cli {

enum ExitCode : int {
  kOk = 0,                // satisfied / nothing found
  kFound = 1,             // violated / counterexample found
  kIndeterminate = 2,
  kUsage = 64,
  kInputTooLarge = 65,
};

/// Entry point behind the `robin` executable. `out` receives the report
/// unless --output redirects it; `err` gets diagnostics and, for csv/json
/// output, the summary line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace robin::cli
