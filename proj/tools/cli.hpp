#pragma once

#include <iosfwd>

namespace latkit::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latkit::cli
