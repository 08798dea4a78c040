#include "bracekit/reports.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = bracekit::cli::run(args);
    std::fputs(result.report.c_str(), stdout);
    return result.exit_code;
}
