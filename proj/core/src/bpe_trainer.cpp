#include <algorithm>
#include <queue>
#include <unordered_set>

#include "flcc/bpe.hpp"
#include "flcc/error.hpp"
#include "segments.hpp"

namespace flcc {
namespace {

using PairKey = std::uint64_t;

PairKey key_of(TokenId left, TokenId right) {
  return (static_cast<PairKey>(static_cast<std::uint32_t>(left)) << 32) | static_cast<std::uint32_t>(right);
}
TokenId left_of(PairKey key) { return static_cast<TokenId>(key >> 32); }
TokenId right_of(PairKey key) { return static_cast<TokenId>(key & 0xFFFFFFFFu); }

struct Word {
  std::vector<TokenId> ids;
  std::uint64_t freq;
};

struct Candidate {
  std::uint64_t count;
  PairKey pair;
};

class MergeQueue {
 public:
  explicit MergeQueue(const Vocabulary& vocab) : heap_(Order{&vocab}) {}

  void push(std::uint64_t count, PairKey pair) { heap_.push({count, pair}); }
  bool empty() const { return heap_.empty(); }
  Candidate top() const { return heap_.top(); }
  void pop() { heap_.pop(); }

 private:
  // Max-heap on count; among equal counts the smallest byte pair wins.
  struct Order {
    const Vocabulary* vocab;
    bool operator()(const Candidate& a, const Candidate& b) const {
      if (a.count != b.count) return a.count < b.count;
      const auto& al = vocab->bytes(left_of(a.pair));
      const auto& bl = vocab->bytes(left_of(b.pair));
      if (al != bl) return al > bl;
      return vocab->bytes(right_of(a.pair)) > vocab->bytes(right_of(b.pair));
    }
  };
  std::priority_queue<Candidate, std::vector<Candidate>, Order> heap_;
};

class PairStats {
 public:
  void add_word(const Word& word, std::size_t index) { apply(word, index, true); }
  void remove_word(const Word& word, std::size_t index) { apply(word, index, false); }

  std::uint64_t count(PairKey pair) const {
    const auto it = counts_.find(pair);
    return it == counts_.end() ? 0 : it->second;
  }

  // Word indices that may contain the pair (may hold stale entries).
  std::vector<std::size_t> take_words(PairKey pair) {
    auto it = where_.find(pair);
    if (it == where_.end()) return {};
    std::vector<std::size_t> words(it->second.begin(), it->second.end());
    where_.erase(it);
    std::sort(words.begin(), words.end());
    return words;
  }

  const std::unordered_set<PairKey>& touched() const { return touched_; }
  void clear_touched() { touched_.clear(); }

  const std::unordered_map<PairKey, std::uint64_t>& counts() const { return counts_; }

 private:
  void apply(const Word& word, std::size_t index, bool add) {
    for (std::size_t i = 0; i + 1 < word.ids.size(); ++i) {
      const auto pair = key_of(word.ids[i], word.ids[i + 1]);
      auto& c = counts_[pair];
      if (add) {
        c += word.freq;
        where_[pair].insert(index);
      } else {
        c -= word.freq;
      }
      if (c == 0) counts_.erase(pair);
      touched_.insert(pair);
    }
  }

  std::unordered_map<PairKey, std::uint64_t> counts_;
  std::unordered_map<PairKey, std::unordered_set<std::size_t>> where_;
  std::unordered_set<PairKey> touched_;
};

bool replace_pair(Word& word, TokenId left, TokenId right, TokenId merged) {
  bool changed = false;
  std::vector<TokenId> out;
  out.reserve(word.ids.size());
  for (std::size_t i = 0; i < word.ids.size(); ++i) {
    if (i + 1 < word.ids.size() && word.ids[i] == left && word.ids[i + 1] == right) {
      out.push_back(merged);
      ++i;
      changed = true;
    } else {
      out.push_back(word.ids[i]);
    }
  }
  if (changed) word.ids = std::move(out);
  return changed;
}

bool has_pair(const Word& word, TokenId left, TokenId right) {
  for (std::size_t i = 0; i + 1 < word.ids.size(); ++i) {
    if (word.ids[i] == left && word.ids[i + 1] == right) return true;
  }
  return false;
}

}  // namespace

void SegmentCounter::add(std::string_view rendered) {
  detail::for_each_segment(
      rendered, segmentation_, [&](std::string_view segment) { ++counts_[std::string(segment)]; },
      [](TokenId) {});
}

Vocabulary train_bpe(const SegmentCounter& segments, std::size_t vocab_size) {
  if (vocab_size < kBaseVocabSize) {
    throw Error(ErrorCode::kInvalidArgument, "vocab_size " + std::to_string(vocab_size) +
                                                 " is below the byte-level floor of " +
                                                 std::to_string(kBaseVocabSize));
  }
  if (segments.distinct() == 0) throw Error(ErrorCode::kEmptyCorpus, "corpus contains no segments");

  auto vocab = Vocabulary::byte_level(segments.segmentation());

  // Sorted so word indices, and therefore everything downstream, are deterministic.
  std::vector<std::pair<std::string, std::uint64_t>> sorted(segments.counts().begin(), segments.counts().end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Word> words;
  words.reserve(sorted.size());
  for (const auto& [text, freq] : sorted) {
    Word w{{}, freq};
    w.ids.reserve(text.size());
    for (const unsigned char b : text) w.ids.push_back(Vocabulary::byte_id(b));
    words.push_back(std::move(w));
  }

  PairStats stats;
  for (std::size_t i = 0; i < words.size(); ++i) stats.add_word(words[i], i);
  stats.clear_touched();

  MergeQueue queue(vocab);
  for (const auto& [pair, count] : stats.counts()) queue.push(count, pair);

  while (vocab.size() < vocab_size && !queue.empty()) {
    const auto best = queue.top();
    queue.pop();
    if (stats.count(best.pair) != best.count) continue;  // stale entry
    if (best.count < 2) break;

    const auto left = left_of(best.pair);
    const auto right = right_of(best.pair);
    const auto merged = vocab.add_merge(left, right);

    for (const auto index : stats.take_words(best.pair)) {
      auto& word = words[index];
      if (!has_pair(word, left, right)) continue;
      stats.remove_word(word, index);
      replace_pair(word, left, right, merged);
      stats.add_word(word, index);
    }
    for (const auto pair : stats.touched()) {
      if (const auto c = stats.count(pair); c > 0) queue.push(c, pair);
    }
    stats.clear_touched();
  }
  return vocab;
}

Vocabulary train_bpe(const std::vector<std::string>& corpus, const TrainOptions& options) {
  SegmentCounter counter(options.segmentation);
  for (const auto& text : corpus) counter.add(text);
  return train_bpe(counter, options.vocab_size);
}

}  // namespace flcc
