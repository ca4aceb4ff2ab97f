#pragma once

#include <iosfwd>

namespace megalie::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

/// Entry point behind the `megalie` binary; writes to the given streams so the
/// command set can be driven from tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace megalie::cli
