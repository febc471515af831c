#pragma once

#include <iosfwd>

namespace mono {

/// Entry point for the command-line tool. Reports go to `out` as JSON,
/// diagnostics to `err`. Returns 0 on success, 1 when a check fails and 2 on
/// bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mono
