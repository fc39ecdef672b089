#pragma once

#include <stdexcept>
#include <string>

namespace sea {

// Raised when an operation's documented precondition does not hold
// (wrong degree, length mismatch, singular matrix, repeated root, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when two scalars live in different quadratic extensions.
class FieldMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Malformed textual input (scalars, polynomials, templates, JSON records).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal bookkeeping check failed. Never expected on valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sea
