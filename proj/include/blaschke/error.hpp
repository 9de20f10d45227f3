#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

enum class ErrorCode {
  InvalidArgument,
  OffCircle,
  OutsideDisk,
  OutsideDomain,
  NonAtomicMeasure,
  EmptyMeasure,
  NotNormalized,
  NoConvergence,
  NotHermitian,
  NotPSD,
  SingularResolvent,
  NotAContraction,
  DimensionMismatch,
  ContourThroughZero,
  MaxDepthExceeded,
  ZeroOnBoundary,
  QuadratureNoConvergence,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blaschke
