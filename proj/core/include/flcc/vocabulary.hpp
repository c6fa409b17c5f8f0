#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flcc {

using TokenId = std::int32_t;
using TokenSequence = std::vector<TokenId>;

enum class SpecialToken { kScopeIn, kScopeOut, kLangSep, kMetaInfoSep, kNewline };
inline constexpr std::size_t kSpecialCount = 5;
inline constexpr std::size_t kByteTokenCount = 256;
// Bytes, then specials; merged tokens follow in training order.
inline constexpr std::size_t kBaseVocabSize = kByteTokenCount + kSpecialCount;

std::string_view special_name(SpecialToken token);
std::optional<SpecialToken> special_from_name(std::string_view name);

// Where segments end. Merges never cross a segment boundary.
enum class Segmentation {
  kLine,   // long tokens: only '\n' and sentinels split
  kSpace,  // control scheme: ' ' is an atomic boundary as well
};

std::string_view to_string(Segmentation segmentation);
std::optional<Segmentation> segmentation_from_string(std::string_view name);

struct Merge {
  TokenId left;
  TokenId right;
  bool operator==(const Merge&) const = default;
};

// Immutable once built; encode/decode may share one instance across threads.
class Vocabulary {
 public:
  // 256 byte tokens plus the specials, no merges.
  static Vocabulary byte_level(Segmentation segmentation = Segmentation::kLine);

  // Appends the token for (left, right) and returns its id.
  TokenId add_merge(TokenId left, TokenId right);

  std::size_t size() const { return tokens_.size(); }
  const std::string& bytes(TokenId id) const;
  std::span<const std::string> tokens() const { return tokens_; }
  std::span<const Merge> merges() const { return merges_; }
  Segmentation segmentation() const { return segmentation_; }

  static constexpr TokenId byte_id(unsigned char byte) { return static_cast<TokenId>(byte); }
  static constexpr TokenId special_id(SpecialToken token) {
    return static_cast<TokenId>(kByteTokenCount + static_cast<std::size_t>(token));
  }
  static std::optional<SpecialToken> special_kind(TokenId id);
  bool contains(TokenId id) const { return id >= 0 && static_cast<std::size_t>(id) < tokens_.size(); }

  // Rank and result id of the merge (left, right), if learned.
  struct MergeResult {
    std::size_t rank;
    TokenId id;
  };
  std::optional<MergeResult> find_merge(TokenId left, TokenId right) const;

  // Linear scan; intended for tests and tooling.
  std::optional<TokenId> find_token(std::string_view bytes) const;

  bool operator==(const Vocabulary& other) const {
    return segmentation_ == other.segmentation_ && tokens_ == other.tokens_ && merges_ == other.merges_;
  }

 private:
  static std::uint64_t pair_key(TokenId left, TokenId right) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(left)) << 32) |
           static_cast<std::uint32_t>(right);
  }

  Segmentation segmentation_ = Segmentation::kLine;
  std::vector<std::string> tokens_;
  std::vector<Merge> merges_;
  std::unordered_map<std::uint64_t, MergeResult> merge_index_;
};

// sha256 over the canonical vocabulary file; binds n-gram models to vocabularies.
std::string vocabulary_fingerprint(const Vocabulary& vocab);

}  // namespace flcc
