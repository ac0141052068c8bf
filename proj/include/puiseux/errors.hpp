#ifndef PUISEUX_ERRORS_HPP
#define PUISEUX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace puiseux {

// Errors a caller can trigger with bad input or unsatisfied preconditions.
// The CLI maps these to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariants. The CLI maps these to exit code 2.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : InputError {
    using InputError::InputError;
};

struct ZeroInversion : InputError {
    ZeroInversion() : InputError("inversion of zero") {}
};

struct ContextMismatch : InputError {
    ContextMismatch() : InputError("operands belong to different field contexts") {}
};

struct ReducibleModulus : InputError {
    explicit ReducibleModulus(const std::string& what) : InputError(what) {}
};

struct DivisionByZeroPoly : InputError {
    DivisionByZeroPoly() : InputError("polynomial division by zero") {}
};

struct ZeroPolynomial : InputError {
    ZeroPolynomial() : InputError("operation undefined for the zero polynomial") {}
};

struct NotSquarefree : InputError {
    explicit NotSquarefree(const std::string& what = "polynomial is not squarefree in y")
        : InputError(what) {}
};

struct SmallCharacteristic : InputError {
    explicit SmallCharacteristic(const std::string& what) : InputError(what) {}
};

struct BadPrimeDenominator : InputError {
    explicit BadPrimeDenominator(const std::string& what) : InputError(what) {}
};

struct TruncationTooSmall : InputError {
    long minimal_sufficient;
    explicit TruncationTooSmall(long minimal)
        : InputError("truncation order too small; need at least " + std::to_string(minimal)),
          minimal_sufficient(minimal) {}
};

struct RetryBudgetExhausted : InputError {
    explicit RetryBudgetExhausted(const std::string& what) : InputError(what) {}
};

struct NonExactDivision : InternalError {
    explicit NonExactDivision(const std::string& what) : InternalError(what) {}
};

struct NonIntegralGenus : InternalError {
    explicit NonIntegralGenus(const std::string& what) : InternalError(what) {}
};

}  // namespace puiseux

#endif
