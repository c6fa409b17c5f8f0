#include "flcc/eval.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>

#include "digest.hpp"
#include "flcc/error.hpp"
#include "flcc/source_document.hpp"
#include "json.hpp"

namespace flcc {
namespace {

using nlohmann::json;

std::size_t common_prefix(std::string_view a, std::string_view b) {
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

LineTrial run_trial(const CorpusFile& file, const TrialPoint& point, Strategy strategy, std::size_t budget,
                    const EvalConfig& config, const Vocabulary& vocab, const Suggester& suggester,
                    EncodeCache& cache) {
  LineTrial trial;
  trial.strategy = strategy;
  trial.budget = budget;
  trial.file = point.file;
  trial.line_number = point.line_number;
  trial.caret = point.caret;
  trial.ground_truth = point.ground_truth;

  ContextRequest request{SourceDocument{file.path, "python", file.text, point.caret}, budget, strategy,
                         config.format};
  const auto t0 = std::chrono::steady_clock::now();
  ComposedContext context;
  try {
    context = compose(request, vocab, &cache);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExhausted) throw;
  }
  trial.context_build_ms = elapsed_ms(t0);
  trial.context_tokens = context.ids.size();

  const auto t1 = std::chrono::steady_clock::now();
  const auto suggestion = suggester.suggest({context, point.ground_truth});
  trial.suggest_ms = elapsed_ms(t1);

  trial.suggestion = suggestion.text;
  trial.matched_chars = common_prefix(trial.suggestion, trial.ground_truth);
  trial.exact = !trial.ground_truth.empty() && trial.suggestion == trial.ground_truth;
  return trial;
}

std::string_view metric_name(std::size_t i) {
  static constexpr std::string_view names[] = {"exact_match_rate", "mean_prefix_ratio", "completed_ratio"};
  return names[i];
}

double metric_value(const MetricSet& m, std::size_t i) {
  switch (i) {
    case 0: return m.exact_match_rate;
    case 1: return m.mean_prefix_ratio;
    default: return m.completed_ratio;
  }
}

}  // namespace

std::string_view to_string(TrialPolicy policy) {
  return policy == TrialPolicy::kLineStart ? "line_start" : "random_midline";
}

std::optional<TrialPolicy> trial_policy_from_string(std::string_view name) {
  if (name == "line_start" || name == "line-start") return TrialPolicy::kLineStart;
  if (name == "random_midline" || name == "random-midline") return TrialPolicy::kRandomMidline;
  return std::nullopt;
}

void EvalConfig::validate() const {
  if (context_sizes.empty()) throw Error(ErrorCode::kInvalidArgument, "context_sizes must not be empty");
  for (const auto size : context_sizes) {
    if (size < kMinContextTokens) {
      throw Error(ErrorCode::kInvalidArgument, "context size " + std::to_string(size) + " is below the floor of " +
                                                   std::to_string(kMinContextTokens));
    }
  }
  if (strategies.empty()) throw Error(ErrorCode::kInvalidArgument, "at least one strategy is required");
}

std::vector<TrialPoint> enumerate_trials(const std::vector<CorpusFile>& files, TrialPolicy policy,
                                         std::uint64_t seed, const FormatConfig& format) {
  std::vector<TrialPoint> trials;
  std::mt19937_64 rng(seed);
  for (std::size_t fi = 0; fi < files.size(); ++fi) {
    const auto& file = files[fi];
    const auto lines = scan_lines(file.text, format.profile);
    for (std::size_t li = 0; li < lines.size(); ++li) {
      const auto& line = lines[li];
      const auto code = format.strip_comments ? line.code : line.raw;
      const auto full = trim_whitespace(code);
      if (full.empty()) continue;
      const auto begin = static_cast<std::size_t>(full.data() - code.data());

      std::size_t pos = begin;
      if (policy == TrialPolicy::kRandomMidline) {
        pos = begin + static_cast<std::size_t>(rng() % full.size());
        while (pos > begin && !is_char_boundary(code, pos)) --pos;
      }
      const auto typed = trim_whitespace(code.substr(0, pos));
      trials.push_back({fi, file.path, li + 1, line.offset + pos, std::string(full.substr(typed.size()))});
    }
  }
  if (trials.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus yields no completion trials");
  return trials;
}

std::string trial_fingerprint(std::span<const TrialPoint> trials) {
  std::string identity;
  for (const auto& t : trials) {
    identity += t.file;
    identity += '\t' + std::to_string(t.line_number) + '\t' + std::to_string(t.caret) + '\n';
  }
  return detail::sha256_hex(identity);
}

MetricSet aggregate(std::span<const LineTrial> trials) {
  MetricSet m;
  m.trial_count = trials.size();
  if (trials.empty()) return m;
  std::size_t exact = 0;
  std::size_t nonempty = 0;
  double prefix_sum = 0.0;
  std::size_t completed_chars = 0;
  std::size_t total_chars = 0;
  double tokens = 0.0;
  double build_ms = 0.0;
  double suggest_ms = 0.0;
  for (const auto& t : trials) {
    if (t.exact) {
      ++exact;
      completed_chars += t.ground_truth.size();
    }
    total_chars += t.ground_truth.size();
    if (!t.ground_truth.empty()) {
      ++nonempty;
      prefix_sum += static_cast<double>(t.matched_chars) / static_cast<double>(t.ground_truth.size());
    }
    tokens += static_cast<double>(t.context_tokens);
    build_ms += t.context_build_ms;
    suggest_ms += t.suggest_ms;
  }
  const auto n = static_cast<double>(trials.size());
  m.exact_match_rate = static_cast<double>(exact) / n;
  m.mean_prefix_ratio = nonempty == 0 ? 0.0 : prefix_sum / static_cast<double>(nonempty);
  m.completed_ratio = total_chars == 0 ? 0.0 : static_cast<double>(completed_chars) / static_cast<double>(total_chars);
  m.mean_context_tokens = tokens / n;
  m.mean_context_build_ms = build_ms / n;
  m.mean_suggest_ms = suggest_ms / n;
  return m;
}

const ReportEntry* EvalReport::find(Strategy strategy, std::size_t budget) const {
  for (const auto& e : entries) {
    if (e.strategy == strategy && e.budget == budget) return &e;
  }
  return nullptr;
}

EvalResult run_eval(const std::vector<CorpusFile>& files, const EvalConfig& config, const Vocabulary& vocab,
                    const Suggester& suggester) {
  config.validate();
  const auto points = enumerate_trials(files, config.policy, config.seed, config.format);

  struct Run {
    Strategy strategy;
    std::size_t budget;
  };
  std::vector<Run> runs;
  for (const auto s : config.strategies) {
    for (const auto b : config.context_sizes) runs.push_back({s, b});
  }

  std::vector<LineTrial> trials(runs.size() * points.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(files.size())));
  // Files are dealt round-robin to workers; every result lands in a fixed slot,
  // so the output does not depend on scheduling.
  auto work = [&](unsigned worker) {
    EncodeCache cache;
    for (std::size_t p = 0; p < points.size(); ++p) {
      const auto& point = points[p];
      if (point.file_index % workers != worker) continue;
      for (std::size_t r = 0; r < runs.size(); ++r) {
        trials[r * points.size() + p] = run_trial(files[point.file_index], point, runs[r].strategy, runs[r].budget,
                                                  config, vocab, suggester, cache);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  EvalResult result;
  result.report.suggester = suggester.name();
  result.report.policy = config.policy;
  result.report.seed = config.seed;
  result.report.trial_fingerprint = trial_fingerprint(points);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto slice = std::span<const LineTrial>(trials).subspan(r * points.size(), points.size());
    result.report.entries.push_back({runs[r].strategy, runs[r].budget, result.report.trial_fingerprint, aggregate(slice)});
  }
  result.trials = std::move(trials);
  return result;
}

EvalResult run_eval(const EvalConfig& config, const Vocabulary& vocab, const Suggester& suggester,
                    const DiagnosticSink& diagnostics) {
  config.validate();
  const auto files = load_corpus(config.corpus_root, config.extensions, diagnostics);
  if (files.empty()) throw Error(ErrorCode::kEmptyCorpus, "no matching files under " + config.corpus_root.string());
  return run_eval(files, config, vocab, suggester);
}

DeltaTable compare_reports(const ReportEntry& a, const ReportEntry& b) {
  if (a.trial_fingerprint != b.trial_fingerprint || a.metrics.trial_count != b.metrics.trial_count) {
    throw Error(ErrorCode::kTrialMismatch, "reports were computed on different trial lists");
  }
  DeltaTable table;
  table.label_a = entry_key(a);
  table.label_b = entry_key(b);
  for (std::size_t i = 0; i < 3; ++i) {
    MetricDelta d;
    d.metric = std::string(metric_name(i));
    d.a = metric_value(a.metrics, i);
    d.b = metric_value(b.metrics, i);
    d.absolute = d.b - d.a;
    if (d.a != 0.0) d.relative = d.absolute / d.a;
    d.sign = d.absolute > 0.0 ? 1 : (d.absolute < 0.0 ? -1 : 0);
    (d.sign > 0 ? table.improved : d.sign < 0 ? table.regressed : table.unchanged) += 1;
    table.rows.push_back(std::move(d));
  }
  return table;
}

std::vector<DeltaTable> ablation_tables(const EvalReport& report) {
  std::vector<DeltaTable> tables;
  std::vector<Strategy> strategies;
  std::vector<std::size_t> budgets;
  for (const auto& e : report.entries) {
    if (std::find(strategies.begin(), strategies.end(), e.strategy) == strategies.end()) strategies.push_back(e.strategy);
    if (std::find(budgets.begin(), budgets.end(), e.budget) == budgets.end()) budgets.push_back(e.budget);
  }
  for (const auto s : strategies) {
    for (std::size_t i = 1; i < budgets.size(); ++i) {
      const auto* a = report.find(s, budgets.front());
      const auto* b = report.find(s, budgets[i]);
      if (a && b) tables.push_back(compare_reports(*a, *b));
    }
  }
  if (strategies.size() > 1) {
    for (const auto budget : budgets) {
      const auto* a = report.find(Strategy::kPlain, budget);
      const auto* b = report.find(Strategy::kRearranged, budget);
      if (a && b) tables.push_back(compare_reports(*a, *b));
    }
  }
  return tables;
}

std::string entry_key(const ReportEntry& entry) {
  return std::string(to_string(entry.strategy)) + "/" + std::to_string(entry.budget);
}

void write_trials_jsonl(std::span<const LineTrial> trials, std::ostream& out) {
  for (const auto& t : trials) {
    const json line{{"version", 1},
                    {"strategy", to_string(t.strategy)},
                    {"budget", t.budget},
                    {"file", t.file},
                    {"line_number", t.line_number},
                    {"caret", t.caret},
                    {"ground_truth", t.ground_truth},
                    {"suggestion", t.suggestion},
                    {"matched_chars", t.matched_chars},
                    {"exact", t.exact},
                    {"context_tokens", t.context_tokens}};
    out << line.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

void write_report_json(const EvalReport& report, std::ostream& out) {
  json results = json::object();
  for (const auto& e : report.entries) {
    results[entry_key(e)] = json{{"strategy", to_string(e.strategy)},
                                 {"budget", e.budget},
                                 {"trial_count", e.metrics.trial_count},
                                 {"exact_match_rate", e.metrics.exact_match_rate},
                                 {"mean_prefix_ratio", e.metrics.mean_prefix_ratio},
                                 {"completed_ratio", e.metrics.completed_ratio},
                                 {"mean_context_tokens", e.metrics.mean_context_tokens},
                                 {"mean_context_build_ms", e.metrics.mean_context_build_ms},
                                 {"mean_suggest_ms", e.metrics.mean_suggest_ms}};
  }
  json comparisons = json::array();
  for (const auto& table : ablation_tables(report)) {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back(json{{"metric", r.metric},
                          {"a", r.a},
                          {"b", r.b},
                          {"absolute", r.absolute},
                          {"relative", r.relative ? json(*r.relative) : json(nullptr)},
                          {"sign", r.sign}});
    }
    comparisons.push_back(json{{"a", table.label_a}, {"b", table.label_b}, {"deltas", std::move(rows)}});
  }
  const json doc{{"version", 1},
                 {"suggester", report.suggester},
                 {"policy", to_string(report.policy)},
                 {"seed", report.seed},
                 {"trial_count", report.entries.empty() ? 0 : report.entries.front().metrics.trial_count},
                 {"trial_fingerprint", report.trial_fingerprint},
                 {"results", std::move(results)},
                 {"comparisons", std::move(comparisons)}};
  out << doc.dump(2, ' ', false, json::error_handler_t::replace) << '\n';
}

void print_summary(const EvalReport& report, std::ostream& out) {
  out << std::left << std::setw(12) << "strategy" << std::right << std::setw(8) << "budget" << std::setw(8) << "trials"
      << std::setw(10) << "exact" << std::setw(10) << "prefix" << std::setw(11) << "completed" << std::setw(10)
      << "ctx_tok" << std::setw(10) << "build_ms" << std::setw(11) << "suggest_ms" << '\n';
  out << std::fixed;
  for (const auto& e : report.entries) {
    const auto& m = e.metrics;
    out << std::left << std::setw(12) << to_string(e.strategy) << std::right << std::setw(8) << e.budget
        << std::setw(8) << m.trial_count << std::setprecision(4) << std::setw(10) << m.exact_match_rate
        << std::setw(10) << m.mean_prefix_ratio << std::setw(11) << m.completed_ratio << std::setprecision(1)
        << std::setw(10) << m.mean_context_tokens << std::setprecision(3) << std::setw(10)
        << m.mean_context_build_ms << std::setw(11) << m.mean_suggest_ms << '\n';
  }
  out << std::defaultfloat;
}

void print_delta_table(const DeltaTable& table, std::ostream& out) {
  out << table.label_a << " -> " << table.label_b << "  (improved " << table.improved << ", regressed "
      << table.regressed << ", unchanged " << table.unchanged << ")\n";
  out << std::fixed;
  for (const auto& r : table.rows) {
    out << "  " << std::left << std::setw(20) << r.metric << std::right << std::setprecision(4) << std::setw(9)
        << r.a << std::setw(9) << r.b << std::showpos << std::setw(10) << r.absolute;
    if (r.relative) {
      out << std::setprecision(1) << std::setw(9) << (*r.relative * 100.0) << '%';
    } else {
      out << std::noshowpos << std::setw(10) << "n/a";
    }
    out << std::noshowpos << '\n';
  }
  out << std::defaultfloat;
}

}  // namespace flcc
