#pragma once

#include <stdexcept>
#include <string>

namespace cm {

// Base class of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands have incompatible or illegal shapes.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Division by zero, a zero polynomial divisor, or inversion of zero.
struct DivisionByZero : Error {
    using Error::Error;
};

// A pair (X, Y) failed the rank-one test rank(XY - YX + I) = 1.
struct RankConditionViolated : Error {
    using Error::Error;
};

// A diagonal-point spectrum contained a repeated value.
struct DuplicateEigenvalue : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

// Malformed textual input (JSON schema or rational syntax).
struct ParseError : Error {
    using Error::Error;
};

} // namespace cm
