#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hcube/vertex.hpp"

namespace hcube::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_bad_input = 2;
inline constexpr int exit_bad_oracle = 3;

/// "a..b" expands to {a, ..., b}; "1,3,7" lists indices; "" is empty.
/// Throws InputError otherwise.
std::vector<Index> parse_window(const std::string& text);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcube::cli
