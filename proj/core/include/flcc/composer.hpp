#pragma once

#include <cstddef>
#include <string>

#include "flcc/bpe.hpp"
#include "flcc/preprocessor.hpp"
#include "flcc/source_document.hpp"
#include "flcc/vocabulary.hpp"

namespace flcc {

enum class Strategy { kPlain, kRearranged };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> strategy_from_string(std::string_view name);

inline constexpr std::size_t kMinContextTokens = 16;
inline constexpr std::size_t kShippedContextTokens = 384;
inline constexpr std::size_t kExtendedContextTokens = 1536;

struct ContextRequest {
  SourceDocument document;
  std::size_t max_tokens = kShippedContextTokens;
  Strategy strategy = Strategy::kPlain;
  FormatConfig format_config;
};

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  bool operator==(const TokenSpan&) const = default;
};

struct ComposedContext {
  TokenSequence ids;
  TokenSpan meta_span;
  TokenSpan code_span;
  std::size_t dropped_code_tokens = 0;
  std::size_t dropped_path_chars = 0;
  std::size_t declaration_count = 0;  // REARRANGED only
  std::size_t declaration_tokens = 0;

  bool operator==(const ComposedContext&) const = default;
};

// Layout: tokens(extension) LANG_SEP tokens(path) METAINFO_SEP code.
// Code is the formatted text above the caret, truncated from the left.
// If the metadata alone overflows, leading path components are dropped; the
// basename, extension and separators are kept. Throws Error(kBudgetExhausted)
// when even that does not fit or max_tokens < kMinContextTokens.
ComposedContext compose_plain(const ContextRequest& request, const Vocabulary& vocab,
                              EncodeCache* cache = nullptr);

// Current function body up to the caret first, then signature lines of the
// other functions and methods in file order, as many whole ones as fit.
// Layout: metadata, declarations, current function. Falls back to
// compose_plain when no function or method contains the caret.
ComposedContext compose_rearranged(const ContextRequest& request, const Vocabulary& vocab,
                                   EncodeCache* cache = nullptr);

ComposedContext compose(const ContextRequest& request, const Vocabulary& vocab, EncodeCache* cache = nullptr);

}  // namespace flcc
