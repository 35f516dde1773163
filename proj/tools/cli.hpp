#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hhq::cli {

/// Exit codes: 0 success / all evaluable identities verified, 1 a refutation
/// was found, 2 usage or evaluation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hhq::cli
