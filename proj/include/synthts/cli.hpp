#pragma once

#include "synthts/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace synthts::cli {

// Process exit codes. Every failure class has its own code.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,     // anything unexpected
    kConfig = 2,      // bad command line, config document or parameter value
    kIo = 3,          // missing or unreadable input, unwritable output, malformed CSV
    kValidation = 4,  // data rejected by a numerical check (lengths, zero load, short series)
};

int exit_code_for(ErrorKind kind) noexcept;

// Runs `synthts <subcommand> ...` in-process. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synthts::cli
