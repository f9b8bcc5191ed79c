#pragma once

#include <stdexcept>
#include <string>

namespace drugdyn {

// Error categories, aligned with the CLI exit codes and the C API status codes.
enum class ErrorCode {
  Validation = 1,    // bad parameters, bad config, bad arguments
  Runtime = 2,       // integration failed, I/O failed
  Verification = 3,  // reference-value verification found a must-match mismatch
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace drugdyn
