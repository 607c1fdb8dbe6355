#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace krom {

/// Base for user-facing failures (bad input, violated preconditions).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operand mentions an atom outside the alphabet it was paired with.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was asked to enumerate more interpretations than
/// its configured bound allows.
class AlphabetTooLargeError : public Error {
public:
    AlphabetTooLargeError(std::size_t size, std::size_t bound)
        : Error("alphabet of " + std::to_string(size) + " atoms exceeds oracle bound of " +
                std::to_string(bound)),
          size_(size), bound_(bound) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t size_;
    std::size_t bound_;
};

/// Syntax error in program text. Line and column are 1-based and point at
/// the first offending byte.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(std::move(message)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace krom
