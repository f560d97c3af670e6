#pragma once

#include <iosfwd>

namespace graham::cli {

/// Exit statuses shared by every command.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,        // bad flags, bad input file, unknown ticker
    kUnavailable = 3,  // data present but no valuation possible
};

/// Runs the command line program. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graham::cli
