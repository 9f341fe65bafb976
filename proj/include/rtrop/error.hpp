#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtrop {

// Malformed text input.  Line and column are 1-based; line 0 means the input
// was a single fragment with no line context.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(format(line, column, what)), line_(line), column_(column), message_(what) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

    ParseError at_line(std::size_t line, std::size_t column_offset = 0) const {
        return ParseError(line, column_ + column_offset, message_);
    }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& what) {
        if (line == 0) return "column " + std::to_string(column) + ": " + what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

// Arguments that violate a mathematical precondition (wrong dimension, point
// not on the hypersurface, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A bounded search (Polya exponent, certificate multiplier, sampling) ran out
// of budget before finding what it was looking for.
class SearchExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rtrop
