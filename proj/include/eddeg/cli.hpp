#pragma once

#include <iosfwd>

namespace eddeg {

// Parses one subcommand, dispatches into the library, and writes a single
// JSON document to `out` (or a machine-readable error object to `err`).
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 retry exhaustion
// or explicitly supplied degenerate data.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eddeg
