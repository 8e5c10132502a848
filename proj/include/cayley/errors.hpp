#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

enum class ErrorCode {
  DimensionMismatch,
  IndexOutOfRange,
  InvalidArgument,
  SingularParameter,
  UnsupportedTransform,
  DegenerateNorm,
  PoleAtEvenK,
  ComplexParameters,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status and a structured error record.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cayley
