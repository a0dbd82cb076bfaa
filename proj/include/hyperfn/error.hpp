#pragma once

#include <stdexcept>
#include <string>

namespace hyperfn {

enum class ErrorCode {
  NotHyperbolic,
  DegenerateQuadruple,
  DeterminantDrift,
  PunctureSeam,
  NonpositiveSide,
  NonpositiveCuff,
  OverflowGuard,
  BadParameter,
  UnsupportedWord,
  PunctureCrossing,
  WrapRangeExhausted,
  GraphMismatch,
  EmptyFamily,
  BadWindow,
  BadCutoff,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperfn
