#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypqch {

enum class ErrorKind {
  DegeneratePentagon,
  NonPositiveLength,
  EmptyAnnulus,
  NotHyperbolic,
  InvalidDilatation,
  NumericalInstability,
  NotShiftInvariant,
  DomainError,
  ComplexityTooLarge,
  ScaleTooLarge,
  WindowTooSmall,
  Unreachable,
  EmptySet,
  InconsistentInput,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. `rule()` names the geometric or
/// topological rule that the input violated, when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string rule = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& rule() const noexcept { return rule_; }

 private:
  ErrorKind kind_;
  std::string rule_;
};

}  // namespace hypqch
