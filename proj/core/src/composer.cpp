#include "flcc/composer.hpp"

#include <algorithm>

#include "flcc/error.hpp"
#include "flcc/structure.hpp"

namespace flcc {
namespace {

struct Metadata {
  TokenSequence ids;
  std::size_t dropped_path_chars = 0;
};

Metadata build_metadata(const SourceDocument& doc, std::size_t max_tokens, const Vocabulary& vocab,
                        EncodeCache* cache) {
  TokenSequence head = encode(file_extension(doc.path), vocab, cache);
  head.push_back(Vocabulary::special_id(SpecialToken::kLangSep));

  std::string_view path = doc.path;
  Metadata meta;
  for (;;) {
    meta.ids = head;
    encode_append(path, vocab, meta.ids, cache);
    meta.ids.push_back(Vocabulary::special_id(SpecialToken::kMetaInfoSep));
    if (meta.ids.size() <= max_tokens) return meta;
    const auto slash = path.find('/');
    if (slash == std::string_view::npos) break;
    meta.dropped_path_chars += slash + 1;
    path.remove_prefix(slash + 1);
  }
  throw Error(ErrorCode::kBudgetExhausted, "metadata for \"" + doc.path + "\" needs " +
                                               std::to_string(meta.ids.size()) + " tokens, budget is " +
                                               std::to_string(max_tokens));
}

void check_request(const ContextRequest& request) {
  if (request.max_tokens < kMinContextTokens) {
    throw Error(ErrorCode::kBudgetExhausted, "max_tokens " + std::to_string(request.max_tokens) +
                                                 " is below the floor of " + std::to_string(kMinContextTokens));
  }
  if (request.document.caret > request.document.text.size()) {
    throw Error(ErrorCode::kInvalidArgument, "caret beyond end of text");
  }
}

// Appends the last `budget` ids of `code` to the context.
void append_code_suffix(ComposedContext& ctx, const TokenSequence& code, std::size_t budget) {
  const auto keep = std::min(budget, code.size());
  ctx.dropped_code_tokens = code.size() - keep;
  ctx.ids.insert(ctx.ids.end(), code.end() - static_cast<std::ptrdiff_t>(keep), code.end());
}

ComposedContext start_context(const ContextRequest& request, const Vocabulary& vocab, EncodeCache* cache) {
  auto meta = build_metadata(request.document, request.max_tokens, vocab, cache);
  ComposedContext ctx;
  ctx.ids = std::move(meta.ids);
  ctx.dropped_path_chars = meta.dropped_path_chars;
  ctx.meta_span = {0, ctx.ids.size()};
  return ctx;
}

}  // namespace

std::string_view to_string(Strategy strategy) { return strategy == Strategy::kPlain ? "plain" : "rearranged"; }

std::optional<Strategy> strategy_from_string(std::string_view name) {
  if (name == "plain") return Strategy::kPlain;
  if (name == "rearranged") return Strategy::kRearranged;
  return std::nullopt;
}

ComposedContext compose_plain(const ContextRequest& request, const Vocabulary& vocab, EncodeCache* cache) {
  check_request(request);
  auto ctx = start_context(request, vocab, cache);
  const auto formatted = format_code(request.document.text_before_caret(), request.format_config);
  const auto code = encode(formatted.rendered, vocab, cache);
  append_code_suffix(ctx, code, request.max_tokens - ctx.ids.size());
  ctx.code_span = {ctx.meta_span.end, ctx.ids.size()};
  return ctx;
}

ComposedContext compose_rearranged(const ContextRequest& request, const Vocabulary& vocab, EncodeCache* cache) {
  check_request(request);
  const auto& doc = request.document;
  const auto structure = extract_structure(doc.text, request.format_config.profile, doc.caret);
  const auto* current = structure.caret_function();
  if (current == nullptr) return compose_plain(request, vocab, cache);

  const auto formatted = format_code(doc.text_before_caret(), request.format_config);
  std::size_t start = formatted.rendered.size();
  for (std::size_t k = 0; k < formatted.events.size(); ++k) {
    const auto& e = formatted.events[k];
    if (e.kind == EventKind::kLine && e.source_offset >= current->body_span.begin) {
      start = formatted.rendered_offsets[k];
      break;
    }
  }
  // Starts at a line boundary, so these ids are a suffix of the plain code encoding.
  const auto current_ids = encode(std::string_view(formatted.rendered).substr(start), vocab, cache);
  // Caret still inside the declaration's indentation: nothing of the block typed yet.
  if (current_ids.empty()) return compose_plain(request, vocab, cache);

  auto ctx = start_context(request, vocab, cache);
  const auto code_budget = request.max_tokens - ctx.ids.size();
  const auto keep = std::min(code_budget, current_ids.size());
  auto declaration_budget = code_budget - keep;

  for (const auto* fn : structure.functions()) {
    if (fn == current || fn->declaration.empty()) continue;
    auto ids = encode(fn->declaration + "\n", vocab, cache);
    if (ids.size() > declaration_budget) continue;
    declaration_budget -= ids.size();
    ctx.ids.insert(ctx.ids.end(), ids.begin(), ids.end());
    ctx.declaration_tokens += ids.size();
    ++ctx.declaration_count;
  }
  append_code_suffix(ctx, current_ids, keep);
  ctx.code_span = {ctx.meta_span.end, ctx.ids.size()};
  return ctx;
}

ComposedContext compose(const ContextRequest& request, const Vocabulary& vocab, EncodeCache* cache) {
  return request.strategy == Strategy::kPlain ? compose_plain(request, vocab, cache)
                                              : compose_rearranged(request, vocab, cache);
}

}  // namespace flcc
