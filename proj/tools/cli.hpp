#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromsym::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kParseError = 2,
    kNegativeCoefficient = 3,
    kNotNice = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromsym::cli
