#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "flcc/vocabulary.hpp"

namespace flcc {

inline constexpr int kDefaultNGramOrder = 4;
inline constexpr std::size_t kDefaultMaxNewTokens = 32;

// Token n-gram counts for every context length 0..order-1.
class NGramModel {
 public:
  using Context = std::vector<TokenId>;
  using Successors = std::map<TokenId, std::uint64_t>;

  NGramModel() = default;
  NGramModel(int order, std::string vocab_ref);

  int order() const { return order_; }
  const std::string& vocab_ref() const { return vocab_ref_; }
  const std::map<Context, Successors>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  const Successors* successors(std::span<const TokenId> context) const;

  void observe(std::span<const TokenId> sequence);
  void add_count(Context context, TokenId next, std::uint64_t count);

  bool operator==(const NGramModel&) const = default;

 private:
  int order_ = kDefaultNGramOrder;
  std::string vocab_ref_;
  std::map<Context, Successors> counts_;
};

// Throws Error(kInvalidArgument) for order < 1 and Error(kEmptyCorpus) when
// no sequence has any token.
NGramModel train_ngram(std::span<const TokenSequence> corpus, int order, std::string vocab_ref = {});

struct Suggestion {
  TokenSequence ids;
  std::string text;
  double score = 0.0;  // sum of log relative frequencies of the greedy picks
};

// Greedy single-line generation with stupid backoff. Stops before NEWLINE or
// any other special token, at max_new_tokens, or when nothing can be predicted.
Suggestion suggest_line(std::span<const TokenId> context, const NGramModel& model, const Vocabulary& vocab,
                        std::size_t max_new_tokens = kDefaultMaxNewTokens);

// JSON: {"version":1,"order":n,"vocab_ref":"...","entries":[{"context":[...],"successors":[[id,count],...]}]}
void save_ngram(const NGramModel& model, std::ostream& out);
void save_ngram(const NGramModel& model, const std::filesystem::path& destination);
NGramModel load_ngram(std::istream& in);
NGramModel load_ngram(const std::filesystem::path& source);

}  // namespace flcc
