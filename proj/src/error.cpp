#include "setopt/error.hpp"

namespace setopt {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NormalOutsideDualCone: return "NormalOutsideDualCone";
    case ErrorCode::NegativeScalar: return "NegativeScalar";
    case ErrorCode::EmptyTranslationSet: return "EmptyTranslationSet";
    case ErrorCode::NotDeclaredConvex: return "NotDeclaredConvex";
    case ErrorCode::BaseOutsideDomain: return "BaseOutsideDomain";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InconsistentLimitData: return "InconsistentLimitData";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::TaskError: return "TaskError";
  }
  return "Unknown";
}

}  // namespace setopt
