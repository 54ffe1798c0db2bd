#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curveta {

enum class ErrorCode {
  PointProximateToZeroOrThreePlus,
  ProximityToLaterPoint,
  DisconnectedCluster,
  GeometricallyInfeasibleSatellite,
  LengthMismatch,
  IterationBudgetExceeded,
  NotAntinef,
  IsMaximalIdeal,
  NoAdmissibleElement,
  InconsistentSequence,
  PreconditionViolated,
  MissingPolynomial,
  OracleMismatch,
  IndexBeyondDomination,
  CoordinateMissing,
  InvalidCoordinate,
  CommonComponent,
  UnsupportedTangent,
  ResourceLimit,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a structured code. what() is "<Code>: <context>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& context);

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace curveta
