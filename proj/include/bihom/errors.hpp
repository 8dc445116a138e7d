#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A square matrix required to be invertible has rank < size.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// Operands have incompatible shapes or ambient dimensions.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// A twist map that must be bijective for the requested operation is not.
struct NotRegularError : Error {
    using Error::Error;
};

/// An input algebra or tensor violates a stated precondition.
struct InvalidInputError : Error {
    using Error::Error;
};

/// A representation fails the compatibility identities.
struct InvalidRepresentationError : Error {
    using Error::Error;
};

/// A 2-cochain is not antisymmetric or not twist-compatible.
struct InvalidCocycleError : Error {
    using Error::Error;
};

/// The supplied 1-cochain does not realize the difference of two cocycles.
struct NotCohomologousError : Error {
    using Error::Error;
};

/// A cochain degree outside 0..dim was requested.
struct DegreeOutOfRangeError : Error {
    using Error::Error;
};

/// Malformed input text or file.
struct ParseError : Error {
    using Error::Error;
};

/// Bad parameters passed to an example generator.
struct InvalidParamsError : Error {
    using Error::Error;
};

/// A mathematically guaranteed property failed; indicates a bug, not bad input.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

} // namespace bihom
