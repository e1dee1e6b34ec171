#pragma once

#include <stdexcept>
#include <string>

namespace kanex {

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Maps from different bases were combined.
struct ContextMismatch : Error
{
    using Error::Error;
};

/// Domains and codomains do not line up.
struct BoundaryMismatch : Error
{
    using Error::Error;
};

/// A candidate (co)cone fails the equations of the (co)limit it is factored through.
struct IncompatibleCandidate : Error
{
    using Error::Error;
};

/// A family that should be a (co)wedge is not one; points at broken upstream data.
struct FactorizationFailure : Error
{
    using Error::Error;
};

/// No natural transformation exists between the given functors.
struct EmptySolution : Error
{
    using Error::Error;
};

/// An object would be too large to enumerate (function sets in FinSet grow fast).
struct SizeLimitExceeded : Error
{
    using Error::Error;
};

struct UnknownObject : Error
{
    using Error::Error;
};

/// Input data that breaks a structural or lawfulness requirement.
struct InvalidStructure : Error
{
    using Error::Error;
};

} // namespace kanex
