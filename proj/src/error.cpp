#include "blaschke/error.hpp"

namespace blaschke {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OffCircle: return "OffCircle";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NonAtomicMeasure: return "NonAtomicMeasure";
    case ErrorCode::EmptyMeasure: return "EmptyMeasure";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::NotAContraction: return "NotAContraction";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ContourThroughZero: return "ContourThroughZero";
    case ErrorCode::MaxDepthExceeded: return "MaxDepthExceeded";
    case ErrorCode::ZeroOnBoundary: return "ZeroOnBoundary";
    case ErrorCode::QuadratureNoConvergence: return "QuadratureNoConvergence";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace blaschke
