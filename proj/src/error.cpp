#include "rscwe/error.hpp"

namespace rscwe {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidPrime: return "InvalidPrime";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
        case ErrorKind::MixedCyclotomicOrder: return "MixedCyclotomicOrder";
        case ErrorKind::DegenerateQuadratic: return "DegenerateQuadratic";
        case ErrorKind::DuplicateEvaluationPoint: return "DuplicateEvaluationPoint";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace rscwe
