#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harmroot {

/// Base class for all numerical and parsing errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Jet division with a vanishing denominator value.
struct DivisionByZeroJet : Error {
    using Error::Error;
};

/// log evaluated at its branch point (argument value 0).
struct BranchPointError : Error {
    using Error::Error;
};

/// phi'(z) = 0 where an operator requires local univalence.
struct NotLocallyUnivalent : Error {
    using Error::Error;
};

/// Jacobian |h'|^2 - |g'|^2 vanishes where an operator divides by it.
struct DegenerateJacobian : Error {
    using Error::Error;
};

/// A method-specific denominator (Halley, harmonic Halley B) vanishes.
struct DegenerateDenominator : Error {
    using Error::Error;
};

/// Mobius transform with ad - bc = 0.
struct DegenerateMobius : Error {
    using Error::Error;
};

/// Verification harness invoked at a point that is not a zero of the map.
struct NotAZero : Error {
    using Error::Error;
};

/// Least-squares fit whose condition estimate exceeds the guard threshold.
struct IllConditionedFit : Error {
    using Error::Error;
};

/// Expression text rejected by the parser; carries the byte offset of the
/// failure and a description of what was expected there.
struct ParseError : Error {
    ParseError(std::string message, std::size_t offset, std::string expected)
        : Error(std::move(message)), offset(offset), expected(std::move(expected)) {}

    std::size_t offset;
    std::string expected;
};

}  // namespace harmroot
