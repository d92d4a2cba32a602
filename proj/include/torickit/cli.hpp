#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torickit::cli {

/// Exit codes of the torickit command.
enum ExitCode : int {
    kOk = 0,
    kParseError = 1,   // unreadable input, malformed JSON, bad flags
    kInvalidFan = 2,   // fan fails validation
    kDomainError = 3,  // a module rejected the request (error code in output)
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torickit::cli
