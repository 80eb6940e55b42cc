#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphmodel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  ///< false, not found, counterexample
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalidInput = 3;
inline constexpr int kExitBudget = 4;

/// Runs one command; `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphmodel::cli
