#pragma once

#include <stdexcept>
#include <string>

namespace grex {

// Base for every error this library raises deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument to an operation (out-of-range index, n = 0 where rejected, ...).
struct UsageError : Error {
    using Error::Error;
};

// A rational series whose denominator has no unit constant term.
struct NonUnitDenominator : Error {
    using Error::Error;
};

// The cokernel computation met a zero elementary divisor (free summand).
struct ZeroDivisorError : Error {
    using Error::Error;
};

// A ring map that is not well defined on the quotient, or applied to an
// unreduced element.
struct IllFormed : Error {
    using Error::Error;
};

// Multiplicative closure of a matrix group has unexpected size.
struct OrderMismatch : Error {
    using Error::Error;
};

// Element set handed to a subgroup check is not closed under multiplication.
struct NotASubgroup : Error {
    using Error::Error;
};

// An isotropy subgroup fails the elementary abelian check.
struct IsotropyNotInFamily : Error {
    using Error::Error;
};

// Fixture file failed to parse or validate.
struct FixtureError : Error {
    using Error::Error;
};

} // namespace grex
