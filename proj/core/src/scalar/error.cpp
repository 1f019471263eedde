#include "rbl/scalar/error.hpp"

namespace rbl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnboundParameter: return "UnboundParameter";
    case ErrorKind::PoleAtBinding: return "PoleAtBinding";
    case ErrorKind::MixedRadicands: return "MixedRadicands";
    case ErrorKind::TagMismatch: return "TagMismatch";
    case ErrorKind::MissingTolerance: return "MissingTolerance";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotLieAlgebra: return "NotLieAlgebra";
    case ErrorKind::RepresentationInvalid: return "RepresentationInvalid";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::NumericTag: return "NumericTag";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorKind::NotPreLie: return "NotPreLie";
    case ErrorKind::RepresentationLawViolated: return "RepresentationLawViolated";
    case ErrorKind::NotEigenpair: return "NotEigenpair";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::MatrixMismatch: return "MatrixMismatch";
    case ErrorKind::UnsupportedModulus: return "UnsupportedModulus";
    case ErrorKind::SoundnessViolation: return "SoundnessViolation";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
  }
  return "Unknown";
}

}  // namespace rbl
