#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input (rational strings, JSON documents).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The request is well formed but beyond what the implementation handles,
/// e.g. sizes that are infeasible for exhaustive enumeration.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// Lattice-point counts disagree with the claimed dimension or period.
class InconsistentCounts : public Error {
public:
    using Error::Error;
};

/// A rational function was evaluated at one of its poles.
class PoleError : public Error {
public:
    using Error::Error;
};

/// An identity that must hold mathematically failed: always an implementation bug.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace ehrhart
