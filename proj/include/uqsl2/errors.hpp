#pragma once

#include <stdexcept>
#include <string>

namespace uqsl2 {

// Error taxonomy mirrors the CLI exit-status map:
//   1 verification failure, 2 usage/parameter, 3 parse/shape,
//   4 recognition, 5 resource.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : Error {
    using Error::Error;
};

// Bad argument values (zero free scalar, q0 in {0,+1,-1}, out-of-range q-binomial).
struct ParameterError : UsageError {
    using UsageError::UsageError;
};

struct ParseError : Error {
    using Error::Error;
};

// Matrix dimension mismatches and violated bidiagonal shape preconditions.
struct ShapeError : Error {
    using Error::Error;
};

struct RecognitionError : Error {
    using Error::Error;
};

// b != 1 but no exact square root of b^-1 exists in the working field.
struct NeedsHintError : RecognitionError {
    using RecognitionError::RecognitionError;
};

// Shape and recurrence conditions hold but the normalized triple fails the relations.
struct NotAModuleError : RecognitionError {
    using RecognitionError::RecognitionError;
};

// Term-count guard tripped on an intermediate polynomial.
struct ResourceError : Error {
    using Error::Error;
};

// Denominator vanishes at the evaluation point.
struct EvaluationError : Error {
    using Error::Error;
};

// Internal cross-check failed (e.g. the two closed-form versions of a basis
// disagree). Indicates a bug, never expected on valid input.
struct ConsistencyError : Error {
    using Error::Error;
};

// Division by zero, singular matrix.
struct ArithmeticError : Error {
    using Error::Error;
};

} // namespace uqsl2
