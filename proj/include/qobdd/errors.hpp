#pragma once

#include <stdexcept>
#include <string>

namespace qobdd {

// Document could not be read as a structured program/automaton.
// line is 1-based; 0 means the failure is not tied to a specific line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Structurally well-formed value that violates a semantic invariant
// (non-unitary matrix, bad ordering, accepting index out of range, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resource guard exceeded; the request is legal but too large for
// exhaustive processing (path enumeration, truth tables, collapse dims).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qobdd
