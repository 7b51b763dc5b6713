#pragma once

#include <iosfwd>

namespace kfu {

/// Runs one command line. Exit status: 0 success, 1 domain error (for
/// example a non-admissible complex), 2 argument or parse error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kfu
