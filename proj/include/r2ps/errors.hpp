#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace r2ps {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected construction data: bad labels, bad masses, empty focal events, ...
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operands built over different frames.
class FrameMismatchError : public Error {
public:
    using Error::Error;
};

/// Every focal pair is conflicting (K = 1); the normalization 1/(1-K) is undefined.
class TotalConflictError : public Error {
public:
    explicit TotalConflictError(const std::string& message, std::size_t step = 0)
        : Error(message), step_(step) {}

    /// Fold step that conflicted; 0 for a plain binary combination.
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// Lexical or structural error in an evidence document. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace r2ps
