#include "flcc/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "flcc/bpe.hpp"
#include "flcc/error.hpp"
#include "json.hpp"

namespace flcc {

NGramModel::NGramModel(int order, std::string vocab_ref) : order_(order), vocab_ref_(std::move(vocab_ref)) {
  if (order < 1) throw Error(ErrorCode::kInvalidArgument, "n-gram order must be at least 1");
}

const NGramModel::Successors* NGramModel::successors(std::span<const TokenId> context) const {
  const auto it = counts_.find(Context(context.begin(), context.end()));
  return it == counts_.end() ? nullptr : &it->second;
}

void NGramModel::observe(std::span<const TokenId> sequence) {
  Context ctx;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto longest = std::min<std::size_t>(static_cast<std::size_t>(order_ - 1), i);
    for (std::size_t k = 0; k <= longest; ++k) {
      ctx.assign(sequence.begin() + static_cast<std::ptrdiff_t>(i - k), sequence.begin() + static_cast<std::ptrdiff_t>(i));
      ++counts_[ctx][sequence[i]];
    }
  }
}

void NGramModel::add_count(Context context, TokenId next, std::uint64_t count) {
  if (context.size() >= static_cast<std::size_t>(order_)) {
    throw Error(ErrorCode::kMalformedModel, "context longer than order - 1");
  }
  if (count == 0) throw Error(ErrorCode::kMalformedModel, "counts must be positive");
  counts_[std::move(context)][next] += count;
}

NGramModel train_ngram(std::span<const TokenSequence> corpus, int order, std::string vocab_ref) {
  NGramModel model(order, std::move(vocab_ref));
  for (const auto& seq : corpus) model.observe(seq);
  if (model.empty()) throw Error(ErrorCode::kEmptyCorpus, "no tokens to count");
  return model;
}

Suggestion suggest_line(std::span<const TokenId> context, const NGramModel& model, const Vocabulary& vocab,
                        std::size_t max_new_tokens) {
  Suggestion out;
  TokenSequence history(context.begin(), context.end());
  const auto max_ctx = static_cast<std::size_t>(model.order() - 1);

  while (out.ids.size() < max_new_tokens) {
    const NGramModel::Successors* table = nullptr;
    for (std::size_t k = std::min(max_ctx, history.size());; --k) {
      const auto suffix = std::span<const TokenId>(history).last(k);
      table = model.successors(suffix);
      if (table != nullptr || k == 0) break;
    }
    if (table == nullptr || table->empty()) break;

    // std::map iterates ids ascending, so the first maximum is the smallest id.
    TokenId best = 0;
    std::uint64_t best_count = 0;
    std::uint64_t total = 0;
    for (const auto& [id, count] : *table) {
      total += count;
      if (count > best_count) {
        best = id;
        best_count = count;
      }
    }
    if (Vocabulary::special_kind(best) || !vocab.contains(best)) break;
    out.ids.push_back(best);
    out.score += std::log(static_cast<double>(best_count) / static_cast<double>(total));
    history.push_back(best);
  }
  out.text = decode(out.ids, vocab);
  return out;
}

void save_ngram(const NGramModel& model, std::ostream& out) {
  using nlohmann::json;
  json entries = json::array();
  for (const auto& [ctx, succ] : model.counts()) {
    json pairs = json::array();
    for (const auto& [id, count] : succ) pairs.push_back(json::array({id, count}));
    entries.push_back(json{{"context", ctx}, {"successors", std::move(pairs)}});
  }
  const json doc{{"version", 1}, {"order", model.order()}, {"vocab_ref", model.vocab_ref()}, {"entries", std::move(entries)}};
  out << doc.dump() << '\n';
}

void save_ngram(const NGramModel& model, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + destination.string());
  save_ngram(model, out);
}

NGramModel load_ngram(std::istream& in) {
  using nlohmann::json;
  try {
    const auto doc = json::parse(in);
    if (doc.at("version") != 1) throw Error(ErrorCode::kMalformedModel, "version must be 1");
    NGramModel model(doc.at("order").get<int>(), doc.at("vocab_ref").get<std::string>());
    for (const auto& entry : doc.at("entries")) {
      const auto ctx = entry.at("context").get<NGramModel::Context>();
      for (const auto& pair : entry.at("successors")) {
        model.add_count(ctx, pair.at(0).get<TokenId>(), pair.at(1).get<std::uint64_t>());
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedModel, e.what());
  }
}

NGramModel load_ngram(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + source.string());
  return load_ngram(in);
}

}  // namespace flcc
