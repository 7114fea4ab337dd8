#pragma once

#include <stdexcept>
#include <string>

namespace fractree {

enum class ErrorCode {
  InvalidParams,
  InvalidConfig,
  IndexOutOfRange,
  IllConditioned,
  RatioOutOfRange,
  DepthExceeded,
  SingularSystem,
  DegenerateGeometry,
  InvalidCancellation,
  DivergentParameters,
  OutOfRange,
  TooFewSamples,
  DegenerateScales,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fractree
