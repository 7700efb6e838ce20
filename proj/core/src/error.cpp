#include "fuzzydist/error.hpp"

namespace fuzzydist {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomainMismatch: return "domain mismatch";
    case ErrorCode::kOutOfRange: return "out of range";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInvalidWeights: return "invalid weights";
    case ErrorCode::kEmptySet: return "empty set";
    case ErrorCode::kZeroPower: return "zero power";
    case ErrorCode::kNotNormalized: return "not normalized";
    case ErrorCode::kLengthMismatch: return "length mismatch";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kRaggedRow: return "ragged row";
    case ErrorCode::kNonNumeric: return "non-numeric cell";
    case ErrorCode::kDuplicateName: return "duplicate name";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fuzzydist
