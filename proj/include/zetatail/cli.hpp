#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zetatail::cli {

enum class ExitCode : int {
    ok = 0,
    check_failed = 1,
    domain = 2,
    precision = 3,
    usage = 64,
};

enum class Format { text, json, csv };

struct RunConfig {
    std::string command;
    std::string exponents;
    std::string args;
    double eps = 1e-9;
    Format format = Format::text;
    bool brute = false;
    std::string suite = "paper";
    std::uint64_t seed = 1;
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetatail::cli
