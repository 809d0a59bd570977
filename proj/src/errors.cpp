#include "hypqch/errors.hpp"

#include <utility>

namespace hypqch {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegeneratePentagon: return "DegeneratePentagon";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::EmptyAnnulus: return "EmptyAnnulus";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::InvalidDilatation: return "InvalidDilatation";
    case ErrorKind::NumericalInstability: return "NumericalInstability";
    case ErrorKind::NotShiftInvariant: return "NotShiftInvariant";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ComplexityTooLarge: return "ComplexityTooLarge";
    case ErrorKind::ScaleTooLarge: return "ScaleTooLarge";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string rule)
    : std::runtime_error(message), kind_(kind), rule_(std::move(rule)) {}

}  // namespace hypqch
