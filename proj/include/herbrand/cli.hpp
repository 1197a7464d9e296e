#pragma once

#include <ostream>

namespace herbrand {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitLimit = 3;

// herbrand analyze|mop|verify|check FILE [flags]. Reports go to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace herbrand
