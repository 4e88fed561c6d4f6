#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicekit {

// Base class for all library errors.  Precondition violations throw one of
// the subclasses below; checks whose failure is an ordinary outcome (a slice
// that is not a slice, an action mismatch, ...) return result structs instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two objects from different polynomial rings were combined.
class ContextMismatchError : public Error {
public:
    using Error::Error;
};

// Variable or generator index out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

// Raised by the expression parser.  Positions are 1-based.
class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownVariable, NegativeExponent, ExponentTooLarge };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
        : Error(what), kind(kind), line(line), column(column) {}

    Kind kind;
    std::size_t line;
    std::size_t column;
};

// Problem-file level errors: missing tables, arity mismatches, reserved
// variable names, bad option values.  Parse errors inside a value are
// rewrapped into this with the offending key path in the message.
class ProblemFormatError : public Error {
public:
    using Error::Error;
};

// A pair of endomorphisms failed the two-sided inverse check.
class NotInverseError : public Error {
public:
    NotInverseError(std::size_t generator, const std::string& what)
        : Error(what), generator(generator) {}

    std::size_t generator;
};

// invert_triangular met a generator image it cannot back-substitute.
class NotTriangularError : public Error {
public:
    NotTriangularError(std::size_t generator, const std::string& what)
        : Error(what), generator(generator) {}

    std::size_t generator;
};

// An operation that requires D^2(x_i) = 0 for all i was given a derivation
// with a nonzero second iterate.
class NotNiceError : public Error {
public:
    NotNiceError(std::size_t generator, const std::string& what)
        : Error(what), generator(generator) {}

    std::size_t generator;
};

// An operation that requires D(s) = 1 was handed an s that is not a slice.
class SliceError : public Error {
public:
    using Error::Error;
};

// A polynomial that must lie in ker D does not.
class KernelMembershipError : public Error {
public:
    KernelMembershipError(std::size_t index, const std::string& what)
        : Error(what), index(index) {}

    std::size_t index;
};

// Local nilpotency could not be confirmed within the iteration bound.
class NilpotencyError : public Error {
public:
    using Error::Error;
};

// Candidate action images do not specialize to the identity at t = 1.
class NotActionError : public Error {
public:
    NotActionError(std::size_t generator, const std::string& what)
        : Error(what), generator(generator) {}

    std::size_t generator;
};

// The affine normalization condition failed, so no linearizer exists along
// this route; the message carries the reason.
class ConditionError : public Error {
public:
    using Error::Error;
};

// gcd(f, g) != 1 in the rank-one normal form constructor.
class GcdError : public Error {
public:
    using Error::Error;
};

// A polynomial expected to be univariate in a designated variable is not.
class NotUnivariateError : public Error {
public:
    using Error::Error;
};

// An intersection or obstruction query over an empty family of derivations.
class EmptyFamilyError : public Error {
public:
    using Error::Error;
};

// A postcondition the library itself guarantees failed to verify.  Reaching
// this is a bug in the library, never a property of the input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace slicekit
