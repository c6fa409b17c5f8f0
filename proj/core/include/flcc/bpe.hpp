#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flcc/vocabulary.hpp"

namespace flcc {

// Default vocabulary size for the CLI; not a value taken from any reference system.
inline constexpr std::size_t kDefaultVocabSize = 16384;

struct TrainOptions {
  std::size_t vocab_size = kDefaultVocabSize;
  Segmentation segmentation = Segmentation::kLine;
};

// Accumulates segment frequencies so the corpus never has to be held in memory.
class SegmentCounter {
 public:
  explicit SegmentCounter(Segmentation segmentation = Segmentation::kLine) : segmentation_(segmentation) {}

  void add(std::string_view rendered);
  std::size_t distinct() const { return counts_.size(); }
  const std::unordered_map<std::string, std::uint64_t>& counts() const { return counts_; }
  Segmentation segmentation() const { return segmentation_; }

 private:
  Segmentation segmentation_;
  std::unordered_map<std::string, std::uint64_t> counts_;
};

// Greedy highest-frequency merge loop restricted to segments. Equal counts are
// broken by the lexicographically smallest (left bytes, right bytes). Training
// stops early once no pair occurs at least twice.
// Throws Error(kEmptyCorpus) when the corpus has no segments and
// Error(kInvalidArgument) when vocab_size is below kBaseVocabSize.
Vocabulary train_bpe(const SegmentCounter& segments, std::size_t vocab_size);
Vocabulary train_bpe(const std::vector<std::string>& corpus, const TrainOptions& options = {});

// Per-thread memo of segment encodings. Not thread-safe; give each worker its own.
class EncodeCache {
 public:
  const TokenSequence* find(std::string_view segment) const;
  void insert(std::string_view segment, TokenSequence ids);
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, TokenSequence> entries_;
};

// Sentinels map to specials and '\n' to NEWLINE; each remaining segment has its
// merges applied in training order. Total over arbitrary bytes.
TokenSequence encode(std::string_view text, const Vocabulary& vocab, EncodeCache* cache = nullptr);
void encode_append(std::string_view text, const Vocabulary& vocab, TokenSequence& out,
                   EncodeCache* cache = nullptr);

// Throws Error(kUnknownId) for ids outside the vocabulary.
std::string decode(std::span<const TokenId> ids, const Vocabulary& vocab);

// Mean bytes per token of `text` under `vocab`.
double chars_per_token(std::span<const std::string> texts, const Vocabulary& vocab);

// JSON vocabulary file (version 1). load throws Error(kMalformedVocab) naming
// the first violated invariant.
void save_vocab(const Vocabulary& vocab, std::ostream& out);
void save_vocab(const Vocabulary& vocab, const std::filesystem::path& destination);
Vocabulary load_vocab(std::istream& in);
Vocabulary load_vocab(const std::filesystem::path& source);

}  // namespace flcc
