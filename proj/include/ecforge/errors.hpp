#pragma once

#include <stdexcept>
#include <string>

namespace ecforge {

// Domain error hierarchy. The CLI maps DegeneracyError to exit code 2 and
// anything else escaping to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guard fired: the inputs are outside the construction's generic locus.
struct DegeneracyError : Error {
    using Error::Error;
};

struct DegenerateParameters : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct ChainViolation : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct ZeroScale : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct ZeroT : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct UnsupportedDegree : Error {
    using Error::Error;
};
struct Degenerate : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct DegeneratePi : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct ExcludedSolution : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct ZeroD2 : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct ZeroD3 : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};
struct NoRationalPoint : Error {
    using Error::Error;
};
struct UndefinedMap : Error {
    using Error::Error;
};
struct InfinityPoint : Error {
    using Error::Error;
};
struct NotIntegral : Error {
    using Error::Error;
};

}  // namespace ecforge
