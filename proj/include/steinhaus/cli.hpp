#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinhaus::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Dispatches the subcommands (decompose, obstruction, qualify, level,
/// verify-paper, search, basis). Exit code 0: all checks passed or the form
/// qualifies; 1: a counterexample or failed verification was found (still a
/// successful run); 2: usage, parse or validation error.
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace steinhaus::cli
