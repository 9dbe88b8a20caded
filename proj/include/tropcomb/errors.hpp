#ifndef TROPCOMB_ERRORS_HPP
#define TROPCOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropcomb {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched variable counts, vector lengths, ring mismatches.
struct DimensionError : Error {
    using Error::Error;
};

// Malformed input: bad JSON, bad text syntax, inconsistent subsets,
// unreduced or zero-denominator rationals.
struct FormatError : Error {
    using Error::Error;
};

// Mathematically undefined request: initial form of 0, valuation of 0.
struct UndefinedInputError : Error {
    using Error::Error;
};

// Valid input the implementation refuses: non-homogeneous ideal under a
// weight-refined (non-global) order.
struct UnsupportedInputError : Error {
    using Error::Error;
};

// Problem size beyond the documented caps.
struct ScaleError : Error {
    using Error::Error;
};

// A weight/lift violates the tropical (min attained twice) condition where
// the operation needs it to hold.
struct NotTropicalError : Error {
    using Error::Error;
};

// A Laurent matrix has an identically zero maximal minor.
struct NotGeneralError : Error {
    using Error::Error;
};

// check_refinement found no distinguishing octahedron.
struct NoCertificateError : Error {
    using Error::Error;
};

// constrained_descent exhausted all facet choices.
struct NoDescentError : Error {
    using Error::Error;
};

// A facet restriction would land on an empty or degenerate hypersimplex.
struct EmptyFaceError : Error {
    using Error::Error;
};

// Caller violated a documented operation precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// Cross-checks that should be impossible to fail did fail. Never swallowed.
struct InternalError : Error {
    using Error::Error;
};

} // namespace tropcomb

#endif
