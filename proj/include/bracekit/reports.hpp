#pragma once

#include <string>
#include <vector>

namespace bracekit::cli {

struct RunResult {
    int exit_code = 0;      // 0 pass, 1 verified mathematical failure, 2 usage/IO
    std::string report;     // byte-deterministic for identical inputs and seed
};

/// Dispatches one subcommand. Never throws; errors land in the report with a
/// stable status line and the matching exit code.
RunResult run(const std::vector<std::string>& args);

/// Fixed scientific formatting used in every report ("%.10e").
std::string format_double(double v);

}  // namespace bracekit::cli
