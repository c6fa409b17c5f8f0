#include "flcc/error.hpp"

namespace flcc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kNegativeDepth: return "NEGATIVE_DEPTH";
    case ErrorCode::kEmptyCorpus: return "EMPTY_CORPUS";
    case ErrorCode::kUnknownId: return "UNKNOWN_ID";
    case ErrorCode::kMalformedVocab: return "MALFORMED_VOCAB";
    case ErrorCode::kMalformedModel: return "MALFORMED_MODEL";
    case ErrorCode::kBudgetExhausted: return "BUDGET_EXHAUSTED";
    case ErrorCode::kVocabMismatch: return "VOCAB_MISMATCH";
    case ErrorCode::kTrialMismatch: return "TRIAL_MISMATCH";
    case ErrorCode::kIo: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace flcc
