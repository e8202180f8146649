#pragma once

#include <stdexcept>
#include <string>

namespace tamefiber {

enum class ErrorKind {
    BadInput,
    NotInvertible,
    ModulusMismatch,
    DivisionByZero,
    NotStable,
    ParseError,
    ValidationError,
    NonIntegralSelfIntersection,
    NegativeCharacterCoefficient,
    InconsistentRounding,
    ToleranceExceeded,
    UnknownType,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI,
// the Python bindings) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace tamefiber
