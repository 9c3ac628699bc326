#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tridecomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;          // bad flags, I/O, parse errors, off-domain input
inline constexpr int kExitNegative = 2;       // a negative triangle weight, or a d whose optimum exceeds 1
inline constexpr int kExitUndefined = 3;      // weighting undefined or an edge lies in no triangle
inline constexpr int kExitInvariant = 4;      // an identity that must hold did not

// Runs one command line (args excludes the program name). Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tridecomp::cli
