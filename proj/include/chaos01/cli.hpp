#pragma once

#include <iosfwd>

namespace chaos01 {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDegenerate = 2;

// Entry point of the chaos01 command line. Diagnostics go to `err`; output
// without an --out target goes to `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chaos01
