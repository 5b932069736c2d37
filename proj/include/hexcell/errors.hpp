#pragma once

#include <stdexcept>
#include <string>

namespace hexcell {

// Caller misuse: bad arguments, dimension mismatch, out-of-range parameters.
// The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Input object fails a precondition (e.g. a code that is not 1-perfect where
// one is required, mixed parities, malformed files).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hexcell
