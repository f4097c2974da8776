#pragma once

#include <stdexcept>
#include <string>

namespace eqsc {

// Base class for every error thrown by the library. Each concrete type maps
// to one failure mode so callers and tests can catch them individually.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cartan matrix is not of finite type (symmetrization not positive definite,
// or the matrix fails the basic shape constraints).
struct NonFiniteTypeError : Error {
    using Error::Error;
};

// A vector that was expected to be a root of the system is not one.
struct NotARootError : Error {
    using Error::Error;
};

// A root lies inside the Levi sub-root-system where a non-Levi root is required.
struct RootInLeviError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// An input that must be integral (e.g. a weight expected to lie in the root
// lattice) has a non-integer coordinate.
struct NonIntegralInputError : Error {
    using Error::Error;
};

// Two independent computations of the same quantity disagree, or a structural
// guarantee of the algorithm failed. Always a bug, never a user error.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

struct BadIndexError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// A Weyl group element passed where a minimal coset representative is
// required. The message carries the projection so the caller can correct it.
struct NotMinimalRepresentativeError : Error {
    using Error::Error;
};

struct PreconditionViolatedError : Error {
    using Error::Error;
};

// A table lookup hit a degree stratum that has not been completed yet.
// Indicates a scheduling bug in the engine.
struct StratumNotReadyError : Error {
    using Error::Error;
};

// The path sum R(u,w;f) evaluated to zero; the diagonal division is impossible.
struct ZeroRError : Error {
    using Error::Error;
};

// The localization linear system has a zero pivot.
struct SingularSystemError : Error {
    using Error::Error;
};

// Malformed command line or config input.
struct UsageError : Error {
    using Error::Error;
};

} // namespace eqsc
