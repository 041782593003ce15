#pragma once

#include <iosfwd>

namespace cvp {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
    kExitDegenerate = 3,
};

// Runs the `cvp` command line. Scores read from "-" come from `in`; tables
// written without --out go to `out`; diagnostics go to `err` as one line.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cvp
