#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flcc/bpe.hpp"
#include "flcc/composer.hpp"
#include "flcc/corpus.hpp"
#include "flcc/error.hpp"
#include "flcc/eval.hpp"
#include "flcc/ngram.hpp"
#include "flcc/preprocessor.hpp"
#include "flcc/source_document.hpp"
#include "flcc/suggester.hpp"
#include "json.hpp"

namespace flcc::cli {
namespace {

// Raised for flag combinations CLI11 cannot express; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename Write>
void write_output(const std::string& path, Write&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  write(out);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

struct InputFlags {
  std::string input;
  bool use_stdin = false;

  void add_to(CLI::App& cmd) {
    auto* file = cmd.add_option("--input", input, "Read from FILE");
    auto* std_in = cmd.add_flag("--stdin", use_stdin, "Read from standard input");
    file->excludes(std_in);
  }

  std::string read(std::istream& in) const {
    if (use_stdin) {
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }
    if (input.empty()) throw UsageError("one of --input FILE or --stdin is required");
    return read_file(input);
  }
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// ---------------------------------------------------------------- preprocess

struct PreprocessFlags {
  InputFlags input;
  bool restore = false;
  bool raw = false;
  bool keep_comments = false;
  std::string indent_unit = "    ";
};

void run_preprocess(const PreprocessFlags& f, Context& io) {
  if (f.indent_unit.empty() || f.indent_unit.find_first_not_of(" \t") != std::string::npos) {
    throw UsageError("--indent-unit must be non-empty spaces or tabs");
  }
  FormatConfig config;
  config.indent_unit = f.indent_unit;
  config.strip_comments = !f.keep_comments;
  const auto text = normalize_newlines(f.input.read(io.in));
  if (f.restore) {
    io.out << restore_indentation(unescape_sentinels(text), config);
    return;
  }
  const auto formatted = format_code(text, config);
  for (const auto& w : formatted.warnings) io.err << "line " << w.line_number << ": " << w.message << '\n';
  io.out << (f.raw ? formatted.rendered : escape_sentinels(formatted.rendered));
}

// ---------------------------------------------------------------- train-bpe

struct TrainBpeFlags {
  std::string corpus;
  std::size_t vocab_size = kDefaultVocabSize;
  std::string out;
  std::vector<std::string> extensions{"py"};
  std::string segmentation = "line";
};

void run_train_bpe(const TrainBpeFlags& f, Context& io) {
  if (f.vocab_size < kBaseVocabSize) {
    throw UsageError("--vocab-size must be at least " + std::to_string(kBaseVocabSize) +
                     " (256 bytes + specials)");
  }
  const auto segmentation = segmentation_from_string(f.segmentation);
  if (!segmentation) throw UsageError("--segmentation must be line or space");

  const auto files = load_corpus(f.corpus, f.extensions, [&](const std::string& m) { io.err << m << '\n'; });
  if (files.empty()) throw Error(ErrorCode::kEmptyCorpus, "no matching files under " + f.corpus);
  SegmentCounter counter(*segmentation);
  for (const auto& file : files) counter.add(format_code(file.text).rendered);
  const auto vocab = train_bpe(counter, f.vocab_size);
  save_vocab(vocab, std::filesystem::path(f.out));
  io.err << "trained " << vocab.size() << " tokens (" << vocab.merges().size() << " merges) from " << files.size()
         << " files, " << counter.distinct() << " distinct segments\n";
}

// ---------------------------------------------------------------- encode

struct EncodeFlags {
  InputFlags input;
  std::string vocab;
  bool preprocess = false;
  std::string dump = "ids";
};

void run_encode(const EncodeFlags& f, Context& io) {
  const auto vocab = load_vocab(std::filesystem::path(f.vocab));
  auto text = normalize_newlines(f.input.read(io.in));
  if (f.preprocess) text = format_code(text).rendered;
  const auto ids = encode(text, vocab);
  if (f.dump == "ids") {
    for (std::size_t i = 0; i < ids.size(); ++i) io.out << (i ? " " : "") << ids[i];
    io.out << '\n';
  } else {
    nlohmann::json tokens = nlohmann::json::array();
    for (const auto id : ids) {
      const auto special = Vocabulary::special_kind(id);
      tokens.push_back(special ? "<" + std::string(special_name(*special)) + ">" : vocab.bytes(id));
    }
    io.out << nlohmann::json{{"ids", ids}, {"tokens", tokens}, {"chars", text.size()}}.dump(
                  -1, ' ', false, nlohmann::json::error_handler_t::replace)
           << '\n';
  }
}

// ---------------------------------------------------------------- compose

struct ComposeFlags {
  std::string file;
  std::string path_as;
  std::size_t caret = 0;
  std::size_t line = 0;
  std::size_t col = 0;
  std::string vocab;
  std::size_t max_tokens = kShippedContextTokens;
  std::string strategy = "plain";
  std::string dump = "text";
};

std::size_t caret_from_line_col(std::string_view text, std::size_t line, std::size_t col) {
  std::size_t offset = 0;
  for (std::size_t l = 1; l < line; ++l) {
    const auto nl = text.find('\n', offset);
    if (nl == std::string_view::npos) throw UsageError("--line " + std::to_string(line) + " is past the end of file");
    offset = nl + 1;
  }
  return offset + (col == 0 ? 0 : col - 1);
}

std::string render_context_text(const ComposedContext& ctx, const Vocabulary& vocab) {
  std::string out;
  for (const auto id : ctx.ids) {
    switch (Vocabulary::special_kind(id).value_or(SpecialToken::kNewline)) {
      case SpecialToken::kScopeIn: out += "<SCOPE_IN>"; break;
      case SpecialToken::kScopeOut: out += "<SCOPE_OUT>"; break;
      case SpecialToken::kLangSep: out += "<LANG_SEP_CHAR>"; break;
      case SpecialToken::kMetaInfoSep: out += "<METAINFO_SEP_CHAR>"; break;
      case SpecialToken::kNewline: out += vocab.bytes(id); break;
    }
  }
  return out;
}

void run_compose(const ComposeFlags& f, const CLI::App& cmd, Context& io) {
  const auto strategy = strategy_from_string(f.strategy);
  if (!strategy) throw UsageError("--strategy must be plain or rearranged");
  const auto text = normalize_newlines(read_file(f.file));
  auto caret = text.size();
  if (cmd.count("--caret") > 0) {
    caret = f.caret;
  } else if (cmd.count("--line") > 0) {
    caret = caret_from_line_col(text, f.line, f.col);
  }
  const auto vocab = load_vocab(std::filesystem::path(f.vocab));
  ContextRequest request{SourceDocument::make(f.path_as.empty() ? f.file : f.path_as, text, caret), f.max_tokens,
                         *strategy, {}};
  const auto ctx = compose(request, vocab);

  if (f.dump == "ids") {
    for (std::size_t i = 0; i < ctx.ids.size(); ++i) io.out << (i ? " " : "") << ctx.ids[i];
    io.out << '\n';
  } else if (f.dump == "json") {
    const nlohmann::json doc{{"path", request.document.path},
                             {"caret", caret},
                             {"strategy", f.strategy},
                             {"max_tokens", f.max_tokens},
                             {"ids", ctx.ids},
                             {"meta_span", {ctx.meta_span.begin, ctx.meta_span.end}},
                             {"code_span", {ctx.code_span.begin, ctx.code_span.end}},
                             {"dropped_code_tokens", ctx.dropped_code_tokens},
                             {"dropped_path_chars", ctx.dropped_path_chars},
                             {"declaration_count", ctx.declaration_count},
                             {"text", render_context_text(ctx, vocab)}};
    io.out << doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
  } else {
    io.out << escape_sentinels(render_context_text(ctx, vocab)) << '\n';
  }
}

// ---------------------------------------------------------------- train-ngram

struct TrainNGramFlags {
  std::string corpus;
  std::string vocab;
  int order = kDefaultNGramOrder;
  std::string out;
  std::vector<std::string> extensions{"py"};
};

void run_train_ngram(const TrainNGramFlags& f, Context& io) {
  if (f.order < 1) throw UsageError("--order must be at least 1");
  const auto vocab = load_vocab(std::filesystem::path(f.vocab));
  const auto files = load_corpus(f.corpus, f.extensions, [&](const std::string& m) { io.err << m << '\n'; });
  if (files.empty()) throw Error(ErrorCode::kEmptyCorpus, "no matching files under " + f.corpus);
  const auto sequences = encode_corpus(files, vocab);
  const auto model = train_ngram(sequences, f.order, vocabulary_fingerprint(vocab));
  save_ngram(model, std::filesystem::path(f.out));
  io.err << "trained order-" << f.order << " model with " << model.counts().size() << " contexts from "
         << files.size() << " files\n";
}

// ---------------------------------------------------------------- eval

struct EvalFlags {
  std::string corpus;
  std::string vocab;
  std::string model;
  std::vector<std::size_t> context_sizes{kShippedContextTokens, kExtendedContextTokens};
  std::string strategy = "plain";
  std::string report;
  std::string trials;
  std::string policy = "line_start";
  std::uint64_t seed = 0;
  std::size_t max_new_tokens = kDefaultMaxNewTokens;
  std::string suggester = "ngram";
  unsigned threads = 1;
  std::vector<std::string> extensions{"py"};
};

void run_eval_command(const EvalFlags& f, Context& io) {
  EvalConfig config;
  config.corpus_root = f.corpus;
  config.extensions = f.extensions;
  config.context_sizes = f.context_sizes;
  config.seed = f.seed;
  config.max_new_tokens = f.max_new_tokens;
  config.threads = f.threads;
  const auto policy = trial_policy_from_string(f.policy);
  if (!policy) throw UsageError("--policy must be line_start or random_midline");
  config.policy = *policy;
  if (f.strategy == "both") {
    config.strategies = {Strategy::kPlain, Strategy::kRearranged};
  } else if (const auto s = strategy_from_string(f.strategy)) {
    config.strategies = {*s};
  } else {
    throw UsageError("--strategy must be plain, rearranged or both");
  }
  for (const auto size : config.context_sizes) {
    if (size < kMinContextTokens) throw UsageError("--context-sizes entries must be at least 16");
  }

  const auto vocab = load_vocab(std::filesystem::path(f.vocab));
  std::unique_ptr<Suggester> suggester;
  NGramModel model;
  if (f.suggester == "ngram") {
    if (f.model.empty()) throw UsageError("--model is required for the ngram suggester");
    model = load_ngram(std::filesystem::path(f.model));
    suggester = std::make_unique<NGramSuggester>(model, vocab, f.max_new_tokens);
  } else if (f.suggester == "oracle") {
    suggester = std::make_unique<OracleSuggester>();
  } else if (f.suggester == "null") {
    suggester = std::make_unique<NullSuggester>();
  } else {
    throw UsageError("--suggester must be ngram, oracle or null");
  }

  const auto result = run_eval(config, vocab, *suggester, [&](const std::string& m) { io.err << m << '\n'; });
  if (!f.report.empty()) write_output(f.report, [&](std::ostream& o) { write_report_json(result.report, o); });
  if (!f.trials.empty()) write_output(f.trials, [&](std::ostream& o) { write_trials_jsonl(result.trials, o); });

  print_summary(result.report, io.out);
  for (const auto& table : ablation_tables(result.report)) {
    io.out << '\n';
    print_delta_table(table, io.out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Context composing toolkit for full-line code completion", "flcc"};
  app.require_subcommand(1);

  PreprocessFlags pre;
  auto* preprocess = app.add_subcommand("preprocess", "Format source code with scope tokens");
  pre.input.add_to(*preprocess);
  preprocess->add_flag("--restore", pre.restore, "Turn formatted text back into indented code");
  preprocess->add_flag("--raw", pre.raw, "Emit sentinel characters instead of ⟨IN⟩/⟨OUT⟩");
  preprocess->add_flag("--keep-comments", pre.keep_comments, "Do not strip comments");
  preprocess->add_option("--indent-unit", pre.indent_unit, "Indentation used by --restore")->capture_default_str();

  TrainBpeFlags tb;
  auto* train_bpe_cmd = app.add_subcommand("train-bpe", "Train a long-token BPE vocabulary");
  train_bpe_cmd->add_option("--corpus", tb.corpus, "Corpus directory")->required();
  train_bpe_cmd->add_option("--vocab-size", tb.vocab_size, "Total vocabulary size")->capture_default_str();
  train_bpe_cmd->add_option("--out", tb.out, "Vocabulary JSON output")->required();
  train_bpe_cmd->add_option("--extensions", tb.extensions, "File extensions to include")->delimiter(',');
  train_bpe_cmd->add_option("--segmentation", tb.segmentation, "line (long tokens) or space (control)")
      ->capture_default_str();

  EncodeFlags enc;
  auto* encode_cmd = app.add_subcommand("encode", "Tokenize text with a vocabulary");
  enc.input.add_to(*encode_cmd);
  encode_cmd->add_option("--vocab", enc.vocab, "Vocabulary JSON")->required();
  encode_cmd->add_flag("--preprocess", enc.preprocess, "Format the input before encoding");
  encode_cmd->add_option("--dump", enc.dump, "ids or json")
      ->check(CLI::IsMember({"ids", "json"}))
      ->capture_default_str();

  ComposeFlags comp;
  auto* compose_cmd = app.add_subcommand("compose", "Build the model prompt for a caret position");
  compose_cmd->add_option("--file", comp.file, "Source file")->required();
  compose_cmd->add_option("--path-as", comp.path_as, "Project-relative path recorded in the metadata");
  auto* caret_opt = compose_cmd->add_option("--caret", comp.caret, "Caret byte offset (default: end of file)");
  auto* line_opt = compose_cmd->add_option("--line", comp.line, "Caret line (1-based)");
  compose_cmd->add_option("--col", comp.col, "Caret column in bytes (1-based)")->needs(line_opt);
  caret_opt->excludes(line_opt);
  compose_cmd->add_option("--vocab", comp.vocab, "Vocabulary JSON")->required();
  compose_cmd->add_option("--max-tokens", comp.max_tokens, "Token budget")->capture_default_str();
  compose_cmd->add_option("--strategy", comp.strategy, "plain or rearranged")->capture_default_str();
  compose_cmd->add_option("--dump", comp.dump, "text, ids or json")
      ->check(CLI::IsMember({"text", "ids", "json"}))
      ->capture_default_str();

  TrainNGramFlags tn;
  auto* train_ngram_cmd = app.add_subcommand("train-ngram", "Train the reference n-gram suggester");
  train_ngram_cmd->add_option("--corpus", tn.corpus, "Corpus directory")->required();
  train_ngram_cmd->add_option("--vocab", tn.vocab, "Vocabulary JSON")->required();
  train_ngram_cmd->add_option("--order", tn.order, "n-gram order")->capture_default_str();
  train_ngram_cmd->add_option("--out", tn.out, "Model JSON output")->required();
  train_ngram_cmd->add_option("--extensions", tn.extensions, "File extensions to include")->delimiter(',');

  EvalFlags ev;
  auto* eval_cmd = app.add_subcommand("eval", "Replay line completions over a corpus");
  eval_cmd->add_option("--corpus", ev.corpus, "Corpus directory")->required();
  eval_cmd->add_option("--vocab", ev.vocab, "Vocabulary JSON")->required();
  eval_cmd->add_option("--model", ev.model, "n-gram model JSON");
  eval_cmd->add_option("--context-sizes", ev.context_sizes, "Comma-separated token budgets")
      ->delimiter(',')
      ->capture_default_str();
  eval_cmd->add_option("--strategy", ev.strategy, "plain, rearranged or both")->capture_default_str();
  eval_cmd->add_option("--report", ev.report, "Report JSON output");
  eval_cmd->add_option("--trials", ev.trials, "Trial log JSONL output");
  eval_cmd->add_option("--policy", ev.policy, "line_start or random_midline")->capture_default_str();
  eval_cmd->add_option("--seed", ev.seed, "Seed for random_midline")->capture_default_str();
  eval_cmd->add_option("--max-new-tokens", ev.max_new_tokens, "Generation limit")->capture_default_str();
  eval_cmd->add_option("--suggester", ev.suggester, "ngram, oracle or null")->capture_default_str();
  eval_cmd->add_option("--threads", ev.threads, "Worker threads")->capture_default_str();
  eval_cmd->add_option("--extensions", ev.extensions, "File extensions to include")->delimiter(',');

  std::vector<const char*> argv{"flcc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Context io{in, out, err};
  try {
    if (preprocess->parsed()) run_preprocess(pre, io);
    if (train_bpe_cmd->parsed()) run_train_bpe(tb, io);
    if (encode_cmd->parsed()) run_encode(enc, io);
    if (compose_cmd->parsed()) run_compose(comp, *compose_cmd, io);
    if (train_ngram_cmd->parsed()) run_train_ngram(tn, io);
    if (eval_cmd->parsed()) run_eval_command(ev, io);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace flcc::cli
