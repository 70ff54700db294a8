#pragma once

#include <iosfwd>
#include <string_view>

namespace hyperproj {

std::string_view version();

// Entry point of the `hyperproj` tool. Returns 0 on success, 1 on usage
// errors (including invalid parameter values) and 2 on runtime failures such
// as exceeded budgets or unreadable inputs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperproj
