#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace herbrand {

enum class ErrorCode {
  kParse,       // E_PARSE
  kUndeclared,  // E_UNDECLARED (also duplicate declarations)
  kSelfRef,     // E_SELF_REF
  kUniverse,    // E_UNIVERSE
  kGraph,       // E_GRAPH
  kIterLimit,   // E_ITER_LIMIT
  kPathLimit,   // E_PATH_LIMIT
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library. `line` is 0 when the error has no
// source position.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  // The message without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::size_t line_;
};

}  // namespace herbrand
