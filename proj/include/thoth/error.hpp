#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thoth {

enum class ErrorCode {
  Encoding,
  Argument,
  InsufficientText,
  Load,
  Validation,
  Extraction,
  NotFound,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Invalid UTF-8 in the input; offset() is the first bad byte.
class EncodingError : public Error {
 public:
  explicit EncodingError(std::size_t offset)
      : Error(ErrorCode::Encoding,
              "invalid UTF-8 at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline Error insufficient_text(const std::string& what) {
  return Error(ErrorCode::InsufficientText, "insufficient text: " + what);
}

}  // namespace thoth
