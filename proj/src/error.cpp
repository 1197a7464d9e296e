#include "herbrand/error.hpp"

namespace herbrand {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kUndeclared: return "E_UNDECLARED";
    case ErrorCode::kSelfRef: return "E_SELF_REF";
    case ErrorCode::kUniverse: return "E_UNIVERSE";
    case ErrorCode::kGraph: return "E_GRAPH";
    case ErrorCode::kIterLimit: return "E_ITER_LIMIT";
    case ErrorCode::kPathLimit: return "E_PATH_LIMIT";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message),
      line_(line) {}

}  // namespace herbrand
