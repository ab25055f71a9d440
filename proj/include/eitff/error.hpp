#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eitff {

enum class ErrorKind {
  // numerics
  NotHermitian,
  NoConvergence,
  AmbiguousClustering,
  // finite field
  OutOfRange,
  ZeroElement,
  // combinatorial axioms
  AxiomViolation,
  InconsistentC,
  CapExceeded,
  NotPrime,
  DivisibilityFailure,
  NotExactMode,
  ModulusMismatch,
  // representations
  NotAffine,
  EvenModulus,
  IndexOutOfRange,
  FiberTooSmall,
  NotTransitive,
  // signature / frame
  NotTwoEigenvalues,
  NotScaledProjection,
  NotIsoclinic,
  NotTight,
  NotOrthonormal,
  // conference
  DegenerateIrrep,
  ExactCountFailure,
  WrongBlockShape,
  // generic input problems
  InvalidInput,
  DimensionMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported as an Error. `axiom` names the
/// violated axiom (e.g. "D3", "S4", "C1") when kind is AxiomViolation and is
/// empty otherwise; `location` is a human-readable position such as
/// "block(1,2) entry 0".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string location = {},
        std::string axiom = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& location() const noexcept { return location_; }
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  ErrorKind kind_;
  std::string location_;
  std::string axiom_;
};

[[noreturn]] void fail(ErrorKind kind, std::string message,
                       std::string location = {});
[[noreturn]] void axiom_violation(std::string axiom, std::string message,
                                  std::string location);

}  // namespace eitff
