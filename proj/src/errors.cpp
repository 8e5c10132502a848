#include "cayley/errors.hpp"

namespace cayley {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularParameter: return "SingularParameter";
    case ErrorCode::UnsupportedTransform: return "UnsupportedTransform";
    case ErrorCode::DegenerateNorm: return "DegenerateNorm";
    case ErrorCode::PoleAtEvenK: return "PoleAtEvenK";
    case ErrorCode::ComplexParameters: return "ComplexParameters";
  }
  return "Unknown";
}

}  // namespace cayley
