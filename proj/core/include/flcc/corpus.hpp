#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "flcc/bpe.hpp"
#include "flcc/preprocessor.hpp"

namespace flcc {

struct CorpusFile {
  std::string path;  // relative to the corpus root, '/'-separated
  std::string text;  // newline-normalized
};

using DiagnosticSink = std::function<void(const std::string&)>;

// Recursively collects files whose extension is in `extensions`, sorted by
// relative path. Unreadable files are reported to `diagnostics` and skipped.
// Throws Error(kIo) if the root is not a directory.
std::vector<CorpusFile> load_corpus(const std::filesystem::path& root, const std::vector<std::string>& extensions,
                                    const DiagnosticSink& diagnostics = {});

// Formatted rendering of every file; the tokenizer's training input.
std::vector<std::string> render_corpus(const std::vector<CorpusFile>& files, const FormatConfig& config = {});

std::vector<TokenSequence> encode_corpus(const std::vector<CorpusFile>& files, const Vocabulary& vocab,
                                         const FormatConfig& config = {});

}  // namespace flcc
