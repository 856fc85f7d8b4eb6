#pragma once

#include <stdexcept>
#include <string>

namespace recap {

// Root of the library's exception hierarchy. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
    using DomainError::DomainError;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Quadratic field outside Q(sqrt 2), Q(sqrt 5).
class UnsupportedField : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numeric refinement did not converge or could not be disambiguated.
class NumericError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (window size, precision ladder) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A closed-form constructor produced something outside Q (e.g. an irrational
/// initial value), so no rational recurrence exists for those parameters.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace recap
