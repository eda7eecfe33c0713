#pragma once

#include <stdexcept>
#include <string>

namespace hexacycle {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  DivisionByZero,
  ZeroPoint,
  MissingVariable,
  DegenerateMap,
  NotMinimalPeriod,
  NotOnSurface,
  Boundary,
  OutsideChart,
  ExcludedParameter,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every mathematical rejection in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hexacycle
