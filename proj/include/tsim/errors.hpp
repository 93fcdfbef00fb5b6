#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsim {

/// Malformed input data (basket/matrix CSV). `line()` is 1-based, 0 when the
/// error is not tied to a specific line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Lookup of a transaction or item id that is not in the dataset.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition on otherwise well-formed data (asymmetric matrix,
/// out-of-range threshold, too few transactions, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad run configuration: unknown measure name, non-positive lambda, unknown
/// input format. Maps to the CLI usage exit code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tsim
