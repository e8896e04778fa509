#include "semitoric/errors.hpp"

namespace semitoric {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::contract: return "contract";
    case ErrorCode::non_invertible: return "non_invertible";
    case ErrorCode::degenerate_level: return "degenerate_level";
    case ErrorCode::separatrix_pole: return "separatrix_pole";
    case ErrorCode::numerical: return "numerical";
    case ErrorCode::consistency: return "consistency";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::invalid_move: return "invalid_move";
    case ErrorCode::ambiguous_match: return "ambiguous_match";
    case ErrorCode::validation: return "validation";
    case ErrorCode::range: return "range";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace semitoric
