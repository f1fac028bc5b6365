#include "mec/error.hpp"

namespace mec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmpty: return "Empty";
    case ErrorCode::kNegativeMass: return "NegativeMass";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kEmptyCollection: return "EmptyCollection";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotMajorized: return "NotMajorized";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kZeroRow: return "ZeroRow";
    case ErrorCode::kZeroColumn: return "ZeroColumn";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace mec
