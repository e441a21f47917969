#include "selfsim/error.hpp"

namespace selfsim {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kIllegalComposition:
      return "IllegalComposition";
    case ErrorCode::kDepthExceeded:
      return "DepthExceeded";
    case ErrorCode::kBackendMismatch:
      return "BackendMismatch";
    case ErrorCode::kInvalidCayleyTable:
      return "InvalidCayleyTable";
    case ErrorCode::kInvalidGraph:
      return "InvalidGraph";
    case ErrorCode::kSourceConditionViolated:
      return "SourceConditionViolated";
    case ErrorCode::kNotIdempotent:
      return "NotIdempotent";
    case ErrorCode::kNotComposable:
      return "NotComposable";
    case ErrorCode::kUnknownAtDepth:
      return "UnknownAtDepth";
    case ErrorCode::kInvalidMatrices:
      return "InvalidMatrices";
    case ErrorCode::kNonBijectiveOutput:
      return "NonBijectiveOutput";
    case ErrorCode::kResidualFreenessRequired:
      return "ResidualFreenessRequired";
    case ErrorCode::kIntegerOverflow:
      return "IntegerOverflow";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kUnknownLabel:
      return "UnknownLabel";
  }
  return "Error";
}

std::string_view to_string(Equality e) noexcept {
  switch (e) {
    case Equality::kEqual:
      return "Equal";
    case Equality::kDistinct:
      return "Distinct";
    case Equality::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

}  // namespace selfsim
