#pragma once

// Command-line front end. Exit codes: 0 success; 1 a verification check
// failed or a numerical routine gave up; 2 invalid configuration (including
// a k_max too small for a first-eigenvalue search); 3 output written but some
// branch points were excluded at poles.

#include <iosfwd>
#include <string>
#include <vector>

namespace magsteklov {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitExcluded = 3;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magsteklov
