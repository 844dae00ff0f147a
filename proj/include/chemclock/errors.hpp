#pragma once

#include <stdexcept>
#include <string>

namespace chemclock {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text or JSON. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace chemclock
