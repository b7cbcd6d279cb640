#pragma once

#include <iosfwd>

namespace logpcf::cli {

/// Runs the logpcf command line. Data goes to `out` (or the --output file),
/// diagnostics to `err`. Returns 0 on success, 1 when a verification suite
/// fails, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace logpcf::cli
