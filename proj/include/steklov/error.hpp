#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied something outside the admissible domain (bad dimension,
/// infeasible geometry, malformed file, invalid profile, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure could not deliver a trustworthy answer (bracket not
/// found, mode cutoff exceeded, monotonicity assumption violated).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Random profile generation gave up after its retry budget.
class GenerationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace steklov
