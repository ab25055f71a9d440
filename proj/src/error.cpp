#include "eitff/error.hpp"

#include <utility>

namespace eitff {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::AmbiguousClustering: return "AmbiguousClustering";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::InconsistentC: return "InconsistentC";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorKind::NotExactMode: return "NotExactMode";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::EvenModulus: return "EvenModulus";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::FiberTooSmall: return "FiberTooSmall";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NotTwoEigenvalues: return "NotTwoEigenvalues";
    case ErrorKind::NotScaledProjection: return "NotScaledProjection";
    case ErrorKind::NotIsoclinic: return "NotIsoclinic";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::DegenerateIrrep: return "DegenerateIrrep";
    case ErrorKind::ExactCountFailure: return "ExactCountFailure";
    case ErrorKind::WrongBlockShape: return "WrongBlockShape";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::string location,
             std::string axiom)
    : std::runtime_error(std::move(message)),
      kind_(kind),
      location_(std::move(location)),
      axiom_(std::move(axiom)) {}

void fail(ErrorKind kind, std::string message, std::string location) {
  throw Error(kind, std::move(message), std::move(location));
}

void axiom_violation(std::string axiom, std::string message,
                     std::string location) {
  throw Error(ErrorKind::AxiomViolation, std::move(message),
              std::move(location), std::move(axiom));
}

}  // namespace eitff
