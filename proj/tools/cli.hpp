#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieschur::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_violated = 2;
inline constexpr int exit_resource_guard = 3;

/// Runs one command line (without the program name). Reports go to out, or to the
/// --out path; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieschur::cli
