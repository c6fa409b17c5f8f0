#include "flcc/suggester.hpp"

#include "flcc/error.hpp"

namespace flcc {

NGramSuggester::NGramSuggester(const NGramModel& model, const Vocabulary& vocab, std::size_t max_new_tokens)
    : model_(model), vocab_(vocab), max_new_tokens_(max_new_tokens) {
  const auto expected = vocabulary_fingerprint(vocab);
  if (model.vocab_ref() != expected) {
    throw Error(ErrorCode::kVocabMismatch,
                "model vocab_ref " + model.vocab_ref() + " does not match vocabulary " + expected);
  }
}

Suggestion NGramSuggester::suggest(const SuggestionRequest& request) const {
  return suggest_line(request.context.ids, model_, vocab_, max_new_tokens_);
}

Suggestion OracleSuggester::suggest(const SuggestionRequest& request) const {
  Suggestion s;
  s.text = std::string(request.ground_truth);
  return s;
}

}  // namespace flcc
