#pragma once

#include <ostream>

namespace moebius {

// Runs the command line: `moebius <subcommand> [options]`. Results go to
// `out`; on failure a JSON error record {"error": {kind, code, message}} is
// written to `out` as well and the matching exit code is returned.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace moebius
