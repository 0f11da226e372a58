#pragma once

#include <stdexcept>
#include <string>

namespace portrait {

/// Error categories surface in CLI output as the machine-parsable code.
enum class ErrorCode {
  kInvalidArgument,
  kInvalidPose,
  kShapeMismatch,
  kIo,
  kSchema,
  kIncompatibleCheckpoint,
  kNumerical,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace portrait
