#pragma once

#include <istream>
#include <string>
#include <vector>

namespace howe::cli {

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one command. `args` excludes the program name; `in` is read only for "-" payloads.
/// Exit codes: 0 success, 1 malformed input or usage, 2 domain error.
Outcome run(const std::vector<std::string>& args, std::istream& in);

} // namespace howe::cli
