#pragma once

#include <stdexcept>
#include <string>

namespace jbt {

/// Base class for every domain error raised by this library.
struct TripleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands do not live in one common triple space.
struct ShapeMismatch : TripleError {
    using TripleError::TripleError;
};

/// classify_tripotent was given an element with ||{e,e,e} - e|| > tol.
struct NotATripotent : TripleError {
    using TripleError::TripleError;
};

/// The operation is undefined at the zero element.
struct ZeroElement : TripleError {
    using TripleError::TripleError;
};

/// The element lies outside the closed unit ball (beyond tolerance).
struct NormExceedsOne : TripleError {
    using TripleError::TripleError;
};

/// The element is not Brown-Pedersen quasi-invertible.
struct NotQuasiInvertible : TripleError {
    using TripleError::TripleError;
};

/// Requested convex weight exceeds the maximal feasible (1 + m_q)/2.
struct LambdaTooLarge : TripleError {
    using TripleError::TripleError;
};

/// A scalar t admits no unimodular split at the requested weight.
struct InfeasibleSplit : TripleError {
    using TripleError::TripleError;
};

/// A stated precondition does not hold for the given inputs.
struct PreconditionViolated : TripleError {
    using TripleError::TripleError;
};

}  // namespace jbt
