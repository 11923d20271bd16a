#include "superknap/error.hpp"

namespace superknap {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonpositiveEntry: return "NonpositiveEntry";
    case ErrorCode::InfeasibleBound: return "InfeasibleBound";
    case ErrorCode::NotSuperincreasing: return "NotSuperincreasing";
    case ErrorCode::OutOfBox: return "OutOfBox";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::IndexNotInSupportTail: return "IndexNotInSupportTail";
    case ErrorCode::NotSupportIndex: return "NotSupportIndex";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::InfeasibleShift: return "InfeasibleShift";
    case ErrorCode::ZeroCoefficientRegime: return "ZeroCoefficientRegime";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::DifferentBoxes: return "DifferentBoxes";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::LiftCheckFailed: return "LiftCheckFailed";
    case ErrorCode::NotInHull: return "NotInHull";
    case ErrorCode::NotDivisorChain: return "NotDivisorChain";
    case ErrorCode::NotStartingAtOne: return "NotStartingAtOne";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyCloud: return "EmptyCloud";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::UnboundedDetected: return "UnboundedDetected";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch:
    case ErrorCode::NonpositiveEntry:
    case ErrorCode::InfeasibleBound:
    case ErrorCode::NotSuperincreasing:
    case ErrorCode::OutOfBox:
    case ErrorCode::ZeroWeight:
    case ErrorCode::IndexNotInSupportTail:
    case ErrorCode::NotSupportIndex:
    case ErrorCode::ZeroCoefficientRegime:
    case ErrorCode::DifferentBoxes:
    case ErrorCode::WrongCase:
    case ErrorCode::NotInHull:
    case ErrorCode::NotDivisorChain:
    case ErrorCode::NotStartingAtOne:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::Infeasible:
    case ErrorCode::InfeasibleShift:
    case ErrorCode::EmptyIntersection:
    case ErrorCode::EmptyCloud:
      return 3;
    case ErrorCode::TooLarge:
    case ErrorCode::DimensionTooLarge:
      return 4;
    case ErrorCode::CertificateFailed:
    case ErrorCode::LiftCheckFailed:
      return 5;
    case ErrorCode::UnboundedDetected:
    case ErrorCode::Internal:
      return 1;
  }
  return 1;
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::size_t> indices)
    : std::runtime_error(std::string(code_name(code)) + ": " + message),
      code_(code),
      indices_(std::move(indices)) {}

}  // namespace superknap
