#pragma once

// Command-line front end. Exit codes: 0 ok, 1 violation or mismatch, 2 usage
// or input error. Payloads go to `out`, diagnostics to `err`.

#include <ostream>
#include <string>
#include <vector>

namespace arrcount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrcount::cli
