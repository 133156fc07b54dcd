#pragma once

#include <stdexcept>
#include <string>

namespace ncqe {

// Parameter combination outside the model's domain of validity.
// `code` is a short stable slug used in CSV status columns.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Root bracket does not enclose a sign change.
class BracketError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative scheme hit its cap without meeting tolerance.
class ConvergenceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed config text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Structurally valid input violating a semantic invariant.
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failure (unwritable path, missing file).
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ncqe
