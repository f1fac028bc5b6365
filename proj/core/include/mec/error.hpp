#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mec {

enum class ErrorCode {
  kEmpty,
  kNegativeMass,
  kNotNormalized,
  kBadParameter,
  kEmptyCollection,
  kTooLarge,
  kNotMajorized,
  kNotSorted,
  kBadProbability,
  kZeroRow,
  kZeroColumn,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code lets callers (and the CLI)
// branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mec
