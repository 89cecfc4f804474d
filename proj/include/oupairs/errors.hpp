#ifndef OUPAIRS_ERRORS_HPP
#define OUPAIRS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oupairs {

/// Invalid input: argument outside the domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series, root finder or bracketing search did not reach its tolerance.
class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Data carries no information for the requested estimate (e.g. zero variance).
class DegenerateError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A simulated cycle exceeded its step budget.
class BudgetError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace oupairs

#endif  // OUPAIRS_ERRORS_HPP
