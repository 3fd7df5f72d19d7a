#pragma once

// Command-line front end. Subcommands: construct, verify, zeros, asympt,
// curve, flow. Exit codes: 0 success, 2 bad input, 3 numerical failure,
// 4 internal invariant violation.

#include <iosfwd>
#include <string>
#include <vector>

namespace diffortho {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitInternal = 4;

/// Environment variable consulted for the default precision in bits.
inline constexpr const char* kPrecisionEnv = "DIFFORTHO_PRECISION";

/// args excludes the program name.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffortho
