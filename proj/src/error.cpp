#include "hyperfn/error.hpp"

namespace hyperfn {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorCode::DeterminantDrift: return "DeterminantDrift";
    case ErrorCode::PunctureSeam: return "PunctureSeam";
    case ErrorCode::NonpositiveSide: return "NonpositiveSide";
    case ErrorCode::NonpositiveCuff: return "NonpositiveCuff";
    case ErrorCode::OverflowGuard: return "OverflowGuard";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::UnsupportedWord: return "UnsupportedWord";
    case ErrorCode::PunctureCrossing: return "PunctureCrossing";
    case ErrorCode::WrapRangeExhausted: return "WrapRangeExhausted";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::BadCutoff: return "BadCutoff";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hyperfn
