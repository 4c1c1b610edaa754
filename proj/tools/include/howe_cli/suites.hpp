#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace howe::cli {

struct SuiteOptions {
    int max_v = 4;  // base-field dimension bound for V
    int max_vp = 6; // and for V'
    std::uint64_t seed = 1;
};

struct SuiteReport {
    std::string name;
    long checks = 0;
    long failures = 0;
    long skipped = 0;
    std::vector<std::string> failure_details; // first few only
    double seconds = 0;

    bool passed() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

} // namespace howe::cli
