#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liesdit::cli {

inline constexpr int kExitDecided = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUndetermined = 2;

/// Runs one command line (args excludes the program name). Reports go to
/// `out` as JSON, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace liesdit::cli
