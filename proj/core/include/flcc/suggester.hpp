#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "flcc/composer.hpp"
#include "flcc/ngram.hpp"

namespace flcc {

struct SuggestionRequest {
  const ComposedContext& context;
  // Only the calibration suggesters look at this.
  std::string_view ground_truth;
};

// Maps a composed context to a single-line completion. Implementations must
// be safe to call concurrently.
class Suggester {
 public:
  virtual ~Suggester() = default;
  virtual std::string name() const = 0;
  virtual Suggestion suggest(const SuggestionRequest& request) const = 0;
};

class NGramSuggester final : public Suggester {
 public:
  // Throws Error(kVocabMismatch) if the model was trained against another vocabulary.
  NGramSuggester(const NGramModel& model, const Vocabulary& vocab, std::size_t max_new_tokens = kDefaultMaxNewTokens);

  std::string name() const override { return "ngram"; }
  Suggestion suggest(const SuggestionRequest& request) const override;

 private:
  const NGramModel& model_;
  const Vocabulary& vocab_;
  std::size_t max_new_tokens_;
};

// Returns the ground truth; upper bound for harness calibration.
class OracleSuggester final : public Suggester {
 public:
  std::string name() const override { return "oracle"; }
  Suggestion suggest(const SuggestionRequest& request) const override;
};

// Always suggests nothing; lower bound for harness calibration.
class NullSuggester final : public Suggester {
 public:
  std::string name() const override { return "null"; }
  Suggestion suggest(const SuggestionRequest&) const override { return {}; }
};

}  // namespace flcc
