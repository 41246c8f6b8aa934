#pragma once

#include <stdexcept>

namespace pfca {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scalar argument lies outside its admissible range (degree outside [0,1],
/// negative scaling factor, probability outside [0,1], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A membership/non-membership pair violates mu^2 + nu^2 <= 1, or an
/// identifier constraint (uniqueness) is broken.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (CSV/JSON structure, unreadable cells).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A weight vector is negative, mis-sized, or does not sum to one.
class WeightError : public Error {
public:
    using Error::Error;
};

/// Containers whose lengths or dimensions do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Partition thresholds that are unordered or out of bounds.
class ThresholdError : public Error {
public:
    using Error::Error;
};

/// A loss function whose monotonicity chains hold under no comparison mode.
class LossOrderError : public Error {
public:
    using Error::Error;
};

/// Lookup of an agent identifier that is not part of the system.
class UnknownAgentError : public Error {
public:
    using Error::Error;
};

} // namespace pfca
