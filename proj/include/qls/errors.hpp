#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InversionOfZero : Error {
    InversionOfZero() : Error("inversion of zero field element") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("polynomial division by zero") {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct CoefficientOutOfRange : Error {
    CoefficientOutOfRange(unsigned code, unsigned q)
        : Error("coefficient code " + std::to_string(code) + " out of range for field of order " +
                std::to_string(q)) {}
};

// A requested coefficient or comparison lies below the trusted precision of a
// truncated series, and deepening (if any) has been exhausted.
struct InsufficientPrecision : Error {
    using Error::Error;
    InsufficientPrecision() : Error("insufficient series precision") {}
};

struct ConstantPartialQuotient : Error {
    ConstantPartialQuotient() : Error("partial quotients at index >= 1 must be nonconstant") {}
};

struct NotQuadratic : Error {
    NotQuadratic() : Error("operation requires an eventually periodic (quadratic) word") {}
};

struct NotPurelyPeriodic : Error {
    NotPurelyPeriodic() : Error("operation requires a purely periodic word") {}
};

// f lies in the projective orbit of alpha; approximation constants are
// undefined there.
struct InTheta : Error {
    InTheta() : Error("series lies in the orbit of alpha") {}
};

// An exponent at or beyond the certified Hall-ray start failed the membership
// check. This indicates an internal inconsistency, never expected input.
struct HallBoundViolation : Error {
    explicit HallBoundViolation(int m)
        : Error("exponent " + std::to_string(m) + " missing from the certified Hall ray"), exponent(m) {}
    int exponent;
};

}  // namespace qls
