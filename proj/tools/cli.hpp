#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scrollreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (without the program name).  Results go to out,
/// diagnostics to err.  Returns 0 on success, 1 when a computation or
/// precondition fails, 2 on malformed flags or input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scrollreg::cli
