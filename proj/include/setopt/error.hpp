#pragma once

#include <stdexcept>
#include <string>

namespace setopt {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch,
  NormalOutsideDualCone,
  NegativeScalar,
  EmptyTranslationSet,
  NotDeclaredConvex,
  BaseOutsideDomain,
  OracleFailure,
  Unsupported,
  ValidationError,
  InconsistentLimitData,
  EmptyGrid,
  DimensionUnsupported,
  TaskError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace setopt
