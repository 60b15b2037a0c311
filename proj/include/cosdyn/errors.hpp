#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cosdyn {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument value (non-finite input, wrong dimension, empty set, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A sampled Young-function invariant failed; carries the violated invariant
/// and the sample point that witnessed the failure.
struct InvalidYoungFunction : Error {
    InvalidYoungFunction(const std::string& invariant, double witness,
                         const std::string& detail)
        : Error("invalid Young function: " + invariant + " violated at t = " +
                std::to_string(witness) + (detail.empty() ? "" : " (" + detail + ")")),
          invariant(invariant),
          witness(witness) {}
    std::string invariant;
    double witness{};
};

/// The conjugate supremum sup_x (x*y - phi(x)) diverges at the requested y.
struct UnboundedConjugate : Error {
    explicit UnboundedConjugate(double y)
        : Error("conjugate is numerically unbounded at y = " + std::to_string(y)), y(y) {}
    double y{};
};

/// The group element is torsion (identity in Z^d) where an aperiodic one is required.
struct AperiodicityError : Error {
    using Error::Error;
};

/// A translate count does not exceed the separation index; `min_n` is the
/// smallest admissible value.
struct SeparationError : Error {
    SeparationError(std::int64_t got, std::int64_t min_n)
        : Error("n = " + std::to_string(got) +
                " does not exceed the separation index; minimal admissible n is " +
                std::to_string(min_n)),
          got(got),
          min_n(min_n) {}
    std::int64_t got{};
    std::int64_t min_n{};
};

/// An operation precondition failed (bad horizon, eps <= 0, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// A numeric routine failed to converge or bracket; message carries diagnostics.
struct NumericError : Error {
    using Error::Error;
};

/// Expression syntax error with byte position and what was expected there.
struct ParseError : Error {
    ParseError(std::size_t position, const std::string& expected)
        : Error("parse error at position " + std::to_string(position) + ": expected " +
                expected),
          position(position),
          expected(expected) {}
    std::size_t position{};
    std::string expected;
};

/// Expression evaluation error (division by zero, log of a nonpositive value).
struct EvalError : Error {
    using Error::Error;
};

}  // namespace cosdyn
