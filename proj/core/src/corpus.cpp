#include "flcc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "flcc/error.hpp"
#include "flcc/source_document.hpp"

namespace flcc {

std::vector<CorpusFile> load_corpus(const std::filesystem::path& root, const std::vector<std::string>& extensions,
                                    const DiagnosticSink& diagnostics) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error(ErrorCode::kIo, "corpus root " + root.string() + " is not a directory");

  std::vector<fs::path> paths;
  for (fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec), end;
       it != end; it.increment(ec)) {
    if (ec) break;
    if (!it->is_regular_file(ec)) continue;
    const auto ext = file_extension(it->path().filename().string());
    if (std::find(extensions.begin(), extensions.end(), ext) != extensions.end()) paths.push_back(it->path());
  }

  std::vector<CorpusFile> files;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    if (in) buf << in.rdbuf();
    if (!in || in.bad()) {
      if (diagnostics) diagnostics("skipping unreadable file " + p.string());
      continue;
    }
    files.push_back({normalize_path(fs::relative(p, root).generic_string()), normalize_newlines(buf.str())});
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
  return files;
}

std::vector<std::string> render_corpus(const std::vector<CorpusFile>& files, const FormatConfig& config) {
  std::vector<std::string> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(format_code(f.text, config).rendered);
  return out;
}

std::vector<TokenSequence> encode_corpus(const std::vector<CorpusFile>& files, const Vocabulary& vocab,
                                         const FormatConfig& config) {
  std::vector<TokenSequence> out;
  out.reserve(files.size());
  EncodeCache cache;
  for (const auto& rendered : render_corpus(files, config)) out.push_back(encode(rendered, vocab, &cache));
  return out;
}

}  // namespace flcc
