#pragma once

#include <stdexcept>
#include <string>

namespace alexmod {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-square input, mismatched dimensions, and similar shape violations.
struct DimensionError : Error {
    using Error::Error;
};

/// A configurable work cap was exceeded (e.g. too many minors to enumerate).
struct ResourceLimitError : Error {
    using Error::Error;
};

/// The reduction loop exceeded its step cap. Termination is guaranteed
/// mathematically, so this signals an implementation bug.
struct StepLimitError : Error {
    using Error::Error;
};

/// A homomorphism matrix does not send source relations into the target
/// relation lattice.
struct IllDefinedError : Error {
    using Error::Error;
};

/// A map does not descend to the requested quotients.
struct NotInducedError : Error {
    using Error::Error;
};

/// A group expected to be free abelian has torsion.
struct NotFreeError : Error {
    using Error::Error;
};

/// Free ranks that must agree do not.
struct RankMismatchError : Error {
    using Error::Error;
};

/// A matrix expected to be nonsingular has determinant zero.
struct SingularError : Error {
    using Error::Error;
};

/// Malformed input file (CLI layer). The message carries a line or field
/// diagnostic.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace alexmod
