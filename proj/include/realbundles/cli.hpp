#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rb {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command (arguments without the program name) and writes the
/// emitted document to `out`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

} // namespace rb
