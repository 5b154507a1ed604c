#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aaa {

/// Malformed input: non-finite entries, duplicate nodes, empty data.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Matrix or vector dimensions that violate an operation's precondition.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sample point coincides with a support point where a Cauchy entry is needed.
class DivisionDegeneracy : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Residue requested at a point where d'(t) vanishes.
class DegeneratePole : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Special function evaluated outside the domain it is validated on.
class OutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Text input that does not parse. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace aaa
