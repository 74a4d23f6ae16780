#pragma once

#include <ostream>

namespace slopeforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

// Entry point of the slopeforge command line tool. Returns the exit code:
// 0 verified, 1 usage or parse error, 2 certificate or validity violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slopeforge::cli
