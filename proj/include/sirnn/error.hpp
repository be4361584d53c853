// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <stdexcept>
#include <string>

namespace sirnn {

enum class ErrorCode {
  kInvalidArgument = 1,
  kShape = 2,
  kNumeric = 3,
  kParse = 4,
  kIo = 5,
  kState = 6,
  kInternal = 7,
};

// Every failure inside the core is reported as an Error; the C API turns the
// code into its status value and keeps the message for sirnn_last_error().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sirnn
