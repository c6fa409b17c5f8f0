#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flcc {

enum class ErrorCode {
  kInvalidArgument,
  kNegativeDepth,
  kEmptyCorpus,
  kUnknownId,
  kMalformedVocab,
  kMalformedModel,
  kBudgetExhausted,
  kVocabMismatch,
  kTrialMismatch,
  kIo,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as flcc::Error; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flcc
