#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flcc/composer.hpp"
#include "flcc/corpus.hpp"
#include "flcc/suggester.hpp"

namespace flcc {

enum class TrialPolicy { kLineStart, kRandomMidline };

std::string_view to_string(TrialPolicy policy);
std::optional<TrialPolicy> trial_policy_from_string(std::string_view name);

struct EvalConfig {
  std::filesystem::path corpus_root;
  std::vector<std::string> extensions{"py"};
  std::vector<std::size_t> context_sizes{kShippedContextTokens, kExtendedContextTokens};
  std::vector<Strategy> strategies{Strategy::kPlain};
  TrialPolicy policy = TrialPolicy::kLineStart;
  std::uint64_t seed = 0;
  std::size_t max_new_tokens = kDefaultMaxNewTokens;
  unsigned threads = 1;
  FormatConfig format;

  // Throws Error(kInvalidArgument) on an empty or sub-floor budget list.
  void validate() const;
};

struct TrialPoint {
  std::size_t file_index = 0;
  std::string file;
  std::size_t line_number = 0;  // 1-based
  std::size_t caret = 0;
  std::string ground_truth;     // formatted remainder of the line after the caret

  bool same_identity(const TrialPoint& other) const {
    return file == other.file && line_number == other.line_number && caret == other.caret;
  }
};

// One trial per non-blank, non-comment line ordered by (file, line).
// LINE_START puts the caret after the indentation; RANDOM_MIDLINE picks a
// seeded position inside the line's code. Throws Error(kEmptyCorpus) when no
// file yields a trial.
std::vector<TrialPoint> enumerate_trials(const std::vector<CorpusFile>& files, TrialPolicy policy,
                                         std::uint64_t seed, const FormatConfig& format = {});

struct LineTrial {
  Strategy strategy = Strategy::kPlain;
  std::size_t budget = 0;
  std::string file;
  std::size_t line_number = 0;
  std::size_t caret = 0;
  std::string ground_truth;
  std::string suggestion;
  std::size_t matched_chars = 0;
  bool exact = false;
  std::size_t context_tokens = 0;
  double context_build_ms = 0.0;
  double suggest_ms = 0.0;
};

struct MetricSet {
  std::size_t trial_count = 0;
  double exact_match_rate = 0.0;
  double mean_prefix_ratio = 0.0;
  double completed_ratio = 0.0;
  double mean_context_tokens = 0.0;
  double mean_context_build_ms = 0.0;
  double mean_suggest_ms = 0.0;
};

struct ReportEntry {
  Strategy strategy = Strategy::kPlain;
  std::size_t budget = 0;
  std::string trial_fingerprint;
  MetricSet metrics;
};

struct EvalReport {
  std::string suggester;
  TrialPolicy policy = TrialPolicy::kLineStart;
  std::uint64_t seed = 0;
  std::string trial_fingerprint;
  std::vector<ReportEntry> entries;  // strategy-major, budgets in config order

  const ReportEntry* find(Strategy strategy, std::size_t budget) const;
};

struct EvalResult {
  EvalReport report;
  std::vector<LineTrial> trials;  // entry-major, then trial order
};

using TrialObserver = std::function<void(const LineTrial&)>;

// Composes a context for every trial and budget, asks the suggester and
// aggregates. Deterministic apart from timing fields. Files that cannot be
// read are reported to `diagnostics` and skipped.
EvalResult run_eval(const EvalConfig& config, const Vocabulary& vocab, const Suggester& suggester,
                    const DiagnosticSink& diagnostics = {});
EvalResult run_eval(const std::vector<CorpusFile>& files, const EvalConfig& config, const Vocabulary& vocab,
                    const Suggester& suggester);

MetricSet aggregate(std::span<const LineTrial> trials);
std::string trial_fingerprint(std::span<const TrialPoint> trials);

struct MetricDelta {
  std::string metric;
  double a = 0.0;
  double b = 0.0;
  double absolute = 0.0;
  std::optional<double> relative;  // (b - a) / a; empty when a == 0
  int sign = 0;
};

struct DeltaTable {
  std::string label_a;
  std::string label_b;
  std::vector<MetricDelta> rows;
  int improved = 0;
  int regressed = 0;
  int unchanged = 0;
};

// Throws Error(kTrialMismatch) when the entries were computed on different trials.
DeltaTable compare_reports(const ReportEntry& a, const ReportEntry& b);

// Every non-first budget against the first, per strategy, then
// rearranged against plain per budget when both strategies ran.
std::vector<DeltaTable> ablation_tables(const EvalReport& report);

std::string entry_key(const ReportEntry& entry);

void write_trials_jsonl(std::span<const LineTrial> trials, std::ostream& out);
void write_report_json(const EvalReport& report, std::ostream& out);
void print_summary(const EvalReport& report, std::ostream& out);
void print_delta_table(const DeltaTable& table, std::ostream& out);

}  // namespace flcc
