#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    UnsupportedFactorization,
    ZeroPolynomial,
    ShapeMismatch,
    NoSolution,
    AmbientMismatch,
    DimensionMismatch,
    NotLeibniz,
    NotAnIdeal,
    InfiniteFieldUnsupported,
    BudgetExceeded,
    NotSolvable,
    CartanSearchFailed,
    NotDecomposing,
    DecompositionFailed,
    BadSpec,
    ParseError,
    FieldParseError,
    Usage,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exit status family used by the command line front end.
///   1  a mathematical property failed
///   2  the request is unsupported (infinite field, factorization cap, budget)
///   3  the input was malformed
int exit_code_for(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// The message without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

} // namespace leibniz
