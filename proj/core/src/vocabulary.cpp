#include "flcc/vocabulary.hpp"

#include <array>

#include "flcc/error.hpp"
#include "flcc/sentinels.hpp"

namespace flcc {
namespace {

constexpr std::array<std::string_view, kSpecialCount> kSpecialNames = {
    "SCOPE_IN", "SCOPE_OUT", "LANG_SEP_CHAR", "METAINFO_SEP_CHAR", "NEWLINE"};

constexpr std::array<std::string_view, kSpecialCount> kSpecialText = {
    kScopeInChar, kScopeOutChar, kLangSepChar, kMetaInfoSepChar, "\n"};

}  // namespace

std::string_view special_name(SpecialToken token) { return kSpecialNames[static_cast<std::size_t>(token)]; }

std::optional<SpecialToken> special_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSpecialCount; ++i) {
    if (kSpecialNames[i] == name) return static_cast<SpecialToken>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Segmentation segmentation) {
  return segmentation == Segmentation::kLine ? "line" : "space";
}

std::optional<Segmentation> segmentation_from_string(std::string_view name) {
  if (name == "line") return Segmentation::kLine;
  if (name == "space") return Segmentation::kSpace;
  return std::nullopt;
}

Vocabulary Vocabulary::byte_level(Segmentation segmentation) {
  Vocabulary vocab;
  vocab.segmentation_ = segmentation;
  vocab.tokens_.reserve(kBaseVocabSize);
  for (std::size_t b = 0; b < kByteTokenCount; ++b) vocab.tokens_.emplace_back(1, static_cast<char>(b));
  for (const auto text : kSpecialText) vocab.tokens_.emplace_back(text);
  return vocab;
}

TokenId Vocabulary::add_merge(TokenId left, TokenId right) {
  if (!contains(left) || !contains(right) || special_kind(left) || special_kind(right)) {
    throw Error(ErrorCode::kInvalidArgument, "merge operands must be existing non-special tokens");
  }
  const auto id = static_cast<TokenId>(tokens_.size());
  tokens_.push_back(tokens_[left] + tokens_[right]);
  merge_index_.emplace(pair_key(left, right), MergeResult{merges_.size(), id});
  merges_.push_back({left, right});
  return id;
}

const std::string& Vocabulary::bytes(TokenId id) const {
  if (!contains(id)) throw Error(ErrorCode::kUnknownId, "token id " + std::to_string(id));
  return tokens_[static_cast<std::size_t>(id)];
}

std::optional<SpecialToken> Vocabulary::special_kind(TokenId id) {
  if (id < static_cast<TokenId>(kByteTokenCount) || id >= static_cast<TokenId>(kBaseVocabSize)) {
    return std::nullopt;
  }
  return static_cast<SpecialToken>(id - static_cast<TokenId>(kByteTokenCount));
}

std::optional<Vocabulary::MergeResult> Vocabulary::find_merge(TokenId left, TokenId right) const {
  const auto it = merge_index_.find(pair_key(left, right));
  if (it == merge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<TokenId> Vocabulary::find_token(std::string_view bytes) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (special_kind(static_cast<TokenId>(i))) continue;
    if (tokens_[i] == bytes) return static_cast<TokenId>(i);
  }
  return std::nullopt;
}

}  // namespace flcc
