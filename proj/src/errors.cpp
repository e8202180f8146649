#include "tamefiber/errors.hpp"

namespace tamefiber {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotStable: return "NotStable";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::NonIntegralSelfIntersection: return "NonIntegralSelfIntersection";
        case ErrorKind::NegativeCharacterCoefficient: return "NegativeCharacterCoefficient";
        case ErrorKind::InconsistentRounding: return "InconsistentRounding";
        case ErrorKind::ToleranceExceeded: return "ToleranceExceeded";
        case ErrorKind::UnknownType: return "UnknownType";
    }
    return "Error";
}

}  // namespace tamefiber
