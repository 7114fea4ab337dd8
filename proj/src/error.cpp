#include "fractree/error.hpp"

namespace fractree {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::InvalidCancellation: return "InvalidCancellation";
    case ErrorCode::DivergentParameters: return "DivergentParameters";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DegenerateScales: return "DegenerateScales";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace fractree
