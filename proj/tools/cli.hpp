#pragma once

#include <iosfwd>

namespace folim::cli {

/// Runs one subcommand. Returns 0 on success, 1 on validation or usage
/// errors, 2 when an internal bound or invariant fails.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace folim::cli
