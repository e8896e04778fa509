#pragma once

#include <stdexcept>
#include <string>

namespace semitoric {

enum class ErrorCode {
  domain,
  contract,
  non_invertible,
  degenerate_level,
  separatrix_pole,
  numerical,
  consistency,
  unsupported,
  invalid_move,
  ambiguous_match,
  validation,
  range,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semitoric
