#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbl {

enum class ErrorKind {
  DivisionByZero,
  UnboundParameter,
  PoleAtBinding,
  MixedRadicands,
  TagMismatch,
  MissingTolerance,
  ParseError,
  DimensionMismatch,
  AlgebraMismatch,
  NotLieAlgebra,
  RepresentationInvalid,
  SingularBasis,
  NumericTag,
  ConstraintViolated,
  NotRotaBaxter,
  NotPreLie,
  RepresentationLawViolated,
  NotEigenpair,
  NoMatch,
  ClassMismatch,
  MatrixMismatch,
  UnsupportedModulus,
  SoundnessViolation,
  UnknownId,
  CapacityExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code contract) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rbl
