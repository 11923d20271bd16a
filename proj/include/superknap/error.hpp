#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace superknap {

enum class ErrorCode {
  LengthMismatch,
  NonpositiveEntry,
  InfeasibleBound,
  NotSuperincreasing,
  OutOfBox,
  ZeroWeight,
  Infeasible,
  IndexNotInSupportTail,
  NotSupportIndex,
  CertificateFailed,
  InfeasibleShift,
  ZeroCoefficientRegime,
  EmptyIntersection,
  DifferentBoxes,
  WrongCase,
  LiftCheckFailed,
  NotInHull,
  NotDivisorChain,
  NotStartingAtOne,
  InvalidArgument,
  TooLarge,
  EmptyCloud,
  DimensionTooLarge,
  UnboundedDetected,
  ParseError,
  Internal,
};

const char* code_name(ErrorCode code);

// Process exit status for the CLI: 2 validation, 3 infeasible or empty,
// 4 guard exceeded, 5 certificate failure, 1 anything else.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> indices = {});

  ErrorCode code() const noexcept { return code_; }
  // 0-based coordinates implicated in the failure.
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace superknap
