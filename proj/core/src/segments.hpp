#pragma once

#include <string_view>

#include "flcc/sentinels.hpp"
#include "flcc/vocabulary.hpp"

namespace flcc::detail {

// Splits text into mergeable segments and atomic boundary tokens, in order.
// on_segment(std::string_view) receives non-empty segments; on_boundary(TokenId)
// receives the token for each boundary.
template <typename OnSegment, typename OnBoundary>
void for_each_segment(std::string_view text, Segmentation segmentation, OnSegment&& on_segment,
                      OnBoundary&& on_boundary) {
  std::size_t start = 0;
  std::size_t i = 0;
  auto flush = [&](std::size_t end) {
    if (end > start) on_segment(text.substr(start, end - start));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      flush(i);
      on_boundary(Vocabulary::special_id(SpecialToken::kNewline));
      start = ++i;
    } else if (c == ' ' && segmentation == Segmentation::kSpace) {
      flush(i);
      on_boundary(Vocabulary::byte_id(' '));
      start = ++i;
    } else if (const int s = sentinel_at(text, i); s >= 0) {
      flush(i);
      on_boundary(Vocabulary::special_id(static_cast<SpecialToken>(s)));
      i += 3;
      start = i;
    } else {
      ++i;
    }
  }
  flush(text.size());
}

}  // namespace flcc::detail
