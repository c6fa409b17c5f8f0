#include <limits>

#include "flcc/bpe.hpp"
#include "flcc/error.hpp"
#include "segments.hpp"

namespace flcc {
namespace {

// Repeatedly merges the lowest-rank adjacent pair; this reproduces the
// training-time application order because a merge never re-creates a pair of
// lower rank.
void encode_segment(std::string_view segment, const Vocabulary& vocab, TokenSequence& out) {
  TokenSequence ids;
  ids.reserve(segment.size());
  for (const unsigned char b : segment) ids.push_back(Vocabulary::byte_id(b));

  while (ids.size() > 1) {
    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    TokenId best_left = 0;
    TokenId best_right = 0;
    TokenId best_id = 0;
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
      if (const auto m = vocab.find_merge(ids[i], ids[i + 1]); m && m->rank < best_rank) {
        best_rank = m->rank;
        best_left = ids[i];
        best_right = ids[i + 1];
        best_id = m->id;
      }
    }
    if (best_rank == std::numeric_limits<std::size_t>::max()) break;
    std::size_t w = 0;
    for (std::size_t r = 0; r < ids.size(); ++r) {
      if (r + 1 < ids.size() && ids[r] == best_left && ids[r + 1] == best_right) {
        ids[w++] = best_id;
        ++r;
      } else {
        ids[w++] = ids[r];
      }
    }
    ids.resize(w);
  }
  out.insert(out.end(), ids.begin(), ids.end());
}

}  // namespace

const TokenSequence* EncodeCache::find(std::string_view segment) const {
  const auto it = entries_.find(std::string(segment));
  return it == entries_.end() ? nullptr : &it->second;
}

void EncodeCache::insert(std::string_view segment, TokenSequence ids) {
  entries_.emplace(std::string(segment), std::move(ids));
}

void encode_append(std::string_view text, const Vocabulary& vocab, TokenSequence& out, EncodeCache* cache) {
  detail::for_each_segment(
      text, vocab.segmentation(),
      [&](std::string_view segment) {
        if (cache == nullptr) {
          encode_segment(segment, vocab, out);
          return;
        }
        if (const auto* hit = cache->find(segment)) {
          out.insert(out.end(), hit->begin(), hit->end());
          return;
        }
        TokenSequence ids;
        encode_segment(segment, vocab, ids);
        out.insert(out.end(), ids.begin(), ids.end());
        cache->insert(segment, std::move(ids));
      },
      [&](TokenId boundary) { out.push_back(boundary); });
}

TokenSequence encode(std::string_view text, const Vocabulary& vocab, EncodeCache* cache) {
  TokenSequence out;
  encode_append(text, vocab, out, cache);
  return out;
}

std::string decode(std::span<const TokenId> ids, const Vocabulary& vocab) {
  std::string out;
  for (const auto id : ids) out += vocab.bytes(id);
  return out;
}

double chars_per_token(std::span<const std::string> texts, const Vocabulary& vocab) {
  std::size_t chars = 0;
  std::size_t tokens = 0;
  EncodeCache cache;
  for (const auto& text : texts) {
    chars += text.size();
    tokens += encode(text, vocab, &cache).size();
  }
  return tokens == 0 ? 0.0 : static_cast<double>(chars) / static_cast<double>(tokens);
}

}  // namespace flcc
