#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rscwe {

enum class ErrorKind {
    InvalidPrime,
    InvalidArgument,
    SizeLimit,
    DivisionByZero,
    CharacteristicTwo,
    MixedCyclotomicOrder,
    DegenerateQuadratic,
    DuplicateEvaluationPoint,
    DimensionMismatch,
    ParameterOutOfRange,
    ShapeMismatch,
    NonIntegralCoefficient,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` identifies the failed contract.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace rscwe
