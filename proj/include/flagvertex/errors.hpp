#pragma once

#include <stdexcept>
#include <string>

namespace flagvertex {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands built over different variable systems.
struct MixedSystemsError : Error {
    using Error::Error;
};

/// Division by an identically-zero rational function.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// A q->0 limit does not exist: the normalized prefactor carries a
/// strictly negative q-exponent. Signals a violated hypothesis upstream.
struct NegativeExponentDivergence : Error {
    using Error::Error;
};

/// Requested a z-adic series expansion of f whose denominator vanishes at z=0.
struct DenominatorVanishesAtZero : Error {
    using Error::Error;
};

/// A weight exponent landed exactly on zero during an s-index count,
/// i.e. the slope is resonant for the degree under consideration.
struct ZeroExponentError : Error {
    using Error::Error;
};

/// Malformed or inconsistent JSON input.
struct SchemaError : Error {
    using Error::Error;
};

/// Not enough series coefficients to run the requested check.
struct InsufficientTruncation : Error {
    using Error::Error;
};

} // namespace flagvertex
