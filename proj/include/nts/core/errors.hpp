#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nts {

/// Malformed input text. `location` is a token offset or a 1-based line
/// number depending on the format; `what()` names which.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t location)
        : std::runtime_error(message), location_(location) {}

    std::size_t location() const { return location_; }

private:
    std::size_t location_;
};

/// Inconsistent data (e.g. a fitness below a listed optimum).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nts
