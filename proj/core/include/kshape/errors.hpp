#pragma once

#include <stdexcept>
#include <string>

namespace kshape {

/// Base class for all exceptions thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value handed to a constructor or function is outside the set of
/// objects the operation is defined on (e.g. a non-partition, a cell that
/// does not belong to a diagram, an index out of range).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation was violated by the caller
/// (e.g. gluing onto a shape whose columns are too short, or requesting a
/// saturating multiplicity for an index that is already saturated).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed.  These checks guard properties
/// that are supposed to hold for every reachable state (uniqueness of the
/// saturating multiplicity, reconstruction of a boundary from its gluing
/// sequence, round-trip identities, ...), so this exception indicates a
/// bug in the library or a genuinely false property, never caller error.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// An enumeration or rewriting loop exceeded its safety budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

namespace detail {

[[noreturn]] inline void invariant_failure(const std::string& what) {
    throw InvariantViolation(what);
}

} // namespace detail

/// Always-on internal check (independent of NDEBUG): correctness of the
/// combinatorial kernel takes precedence over the last few percent of speed.
#define KSHAPE_INVARIANT(cond, msg)                                          \
    do {                                                                     \
        if (!(cond)) ::kshape::detail::invariant_failure(msg);               \
    } while (false)

} // namespace kshape
