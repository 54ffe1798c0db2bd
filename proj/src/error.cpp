#include "curveta/error.hpp"

namespace curveta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PointProximateToZeroOrThreePlus: return "PointProximateToZeroOrThreePlus";
    case ErrorCode::ProximityToLaterPoint: return "ProximityToLaterPoint";
    case ErrorCode::DisconnectedCluster: return "DisconnectedCluster";
    case ErrorCode::GeometricallyInfeasibleSatellite: return "GeometricallyInfeasibleSatellite";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorCode::NotAntinef: return "NotAntinef";
    case ErrorCode::IsMaximalIdeal: return "IsMaximalIdeal";
    case ErrorCode::NoAdmissibleElement: return "NoAdmissibleElement";
    case ErrorCode::InconsistentSequence: return "InconsistentSequence";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MissingPolynomial: return "MissingPolynomial";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::IndexBeyondDomination: return "IndexBeyondDomination";
    case ErrorCode::CoordinateMissing: return "CoordinateMissing";
    case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorCode::CommonComponent: return "CommonComponent";
    case ErrorCode::UnsupportedTangent: return "UnsupportedTangent";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& context)
    : std::runtime_error(std::string(to_string(code)) + ": " + context),
      code_(code),
      context_(context) {}

}  // namespace curveta
