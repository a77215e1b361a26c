#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abideal {

/// Entry point of the `abideal` tool. Returns 0 on success, 1 when a
/// verification suite fails and 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abideal
