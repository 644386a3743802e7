#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dyncon::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInputError = 2;
inline constexpr int kScriptViolation = 3;
inline constexpr int kOracleMismatch = 4;

/// Entry point of the dyncon tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyncon::cli
