#pragma once

#include <ostream>

namespace orthopoly::cli {

// Exit codes: 0 success, 1 bad arguments or unreadable/malformed input,
// 2 topology error (delineate) or shape violation (bench --check-shape).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitResult = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orthopoly::cli
