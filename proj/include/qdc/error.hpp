#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

enum class ErrorCode {
  kValidation = 1,
  kIntegrationFailure,
  kPole,
  kOmegaDZero,
  kUnresolvedBracket,
  kTruncation,
  kUsage,
  kIo,
};

const char* to_string(ErrorCode code);

/// Single exception type for the core library; the C API maps `code()` onto
/// its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qdc
