#include <benchmark/benchmark.h>

#include "flcc/bpe.hpp"
#include "flcc/composer.hpp"
#include "flcc/corpus.hpp"
#include "flcc/ngram.hpp"

namespace {

using namespace flcc;

const std::vector<CorpusFile>& corpus() {
  static const auto files = load_corpus(std::filesystem::path(FLCC_FIXTURE_DIR) / "corpus", {"py"});
  return files;
}

const std::vector<std::string>& rendered() {
  static const auto r = render_corpus(corpus());
  return r;
}

const Vocabulary& vocab(Segmentation seg) {
  static const auto line = [] {
    return train_bpe(rendered(), {4096, Segmentation::kLine});
  }();
  static const auto space = [] {
    return train_bpe(rendered(), {4096, Segmentation::kSpace});
  }();
  return seg == Segmentation::kLine ? line : space;
}

std::size_t corpus_bytes() {
  std::size_t n = 0;
  for (const auto& r : rendered()) n += r.size();
  return n;
}

void BM_Format(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& f : corpus()) benchmark::DoNotOptimize(format_code(f.text));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * corpus_bytes()));
}
BENCHMARK(BM_Format)->Unit(benchmark::kMillisecond);

void BM_Train(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(train_bpe(rendered(), {size, Segmentation::kLine}));
}
BENCHMARK(BM_Train)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

// Encoding throughput plus the compression ratio of each segmentation scheme.
void BM_Encode(benchmark::State& state) {
  const auto seg = state.range(0) == 0 ? Segmentation::kLine : Segmentation::kSpace;
  const auto& v = vocab(seg);
  std::size_t tokens = 0;
  for (auto _ : state) {
    tokens = 0;
    for (const auto& r : rendered()) tokens += encode(r, v).size();
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * corpus_bytes()));
  state.counters["chars_per_token"] = static_cast<double>(corpus_bytes()) / static_cast<double>(tokens);
  state.SetLabel(std::string(to_string(seg)));
}
BENCHMARK(BM_Encode)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Compose(benchmark::State& state) {
  const auto budget = static_cast<std::size_t>(state.range(0));
  const auto strategy = state.range(1) == 0 ? Strategy::kPlain : Strategy::kRearranged;
  const auto& file = corpus()[17];
  const auto doc = SourceDocument::make(file.path, file.text, file.text.size() * 2 / 3);
  EncodeCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(compose({doc, budget, strategy, {}}, vocab(Segmentation::kLine), &cache));
}
BENCHMARK(BM_Compose)->ArgsProduct({{384, 1536}, {0, 1}});

void BM_Suggest(benchmark::State& state) {
  const auto& v = vocab(Segmentation::kLine);
  static const auto model = train_ngram(encode_corpus(corpus(), v), kDefaultNGramOrder);
  const auto context = encode(rendered()[3].substr(0, rendered()[3].size() / 2), v);
  for (auto _ : state) benchmark::DoNotOptimize(suggest_line(context, model, v));
}
BENCHMARK(BM_Suggest);

}  // namespace

BENCHMARK_MAIN();
