#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bracekit {

/// Error with a stable machine-readable kind ("NotLatin", "JacobiViolation", ...)
/// plus a human-readable detail message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace bracekit
