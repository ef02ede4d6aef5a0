#ifndef RIORDAN_ERRORS_HPP
#define RIORDAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riordan {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series: divisor has a higher valuation than the dividend (no series quotient).
struct DivisionByNonUnit : Error {
    using Error::Error;
};

// series: inner series of a composition has a nonzero constant term.
struct CompositionNonComposable : Error {
    using Error::Error;
};

// series: compositional inverse requested for f with f(0) != 0 or f'(0) = 0.
struct NotInvertible : Error {
    using Error::Error;
};

// series: constant term is not the square of a rational.
struct NoRationalSqrt : Error {
    using Error::Error;
};

// series: division by x^k with a nonzero coefficient below x^k.
struct NonzeroLowOrder : Error {
    using Error::Error;
};

// riordan: pair (g, f) violates g(0) != 0, f(0) = 0 or f'(0) != 0.
struct InvalidElement : Error {
    using Error::Error;
};

// riordan: requested more matrix rows than the truncation order supports.
struct OrderTooSmall : Error {
    using Error::Error;
};

// construct: the P argument failed the pseudo-involution check.
struct NotPseudoInvolution : Error {
    using Error::Error;
};

// construct: a closed form degenerates (vanishing constant in a published formula).
struct Degenerate : Error {
    using Error::Error;
};

// analysis: continued-fraction expansion requires g(0) = 1.
struct NonUnitConstant : Error {
    using Error::Error;
};

// analysis: B-sequence extraction requires f(0) = 0 and f'(0) = 1.
struct BadNormalization : Error {
    using Error::Error;
};

// expr: syntax error, carries the offending position and what was expected.
struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& expected_what)
        : Error("parse error at position " + std::to_string(pos) + ": expected " + expected_what),
          position(pos),
          expected(expected_what) {}

    std::size_t position;
    std::string expected;
};

} // namespace riordan

#endif // RIORDAN_ERRORS_HPP
