#include "flcc/source_document.hpp"

#include <algorithm>
#include <cctype>

#include "flcc/error.hpp"
#include "flcc/language_profile.hpp"

namespace flcc {

std::string normalize_path(std::string_view path) {
  std::string out(path);
  std::replace(out.begin(), out.end(), '\\', '/');
  while (out.starts_with("./")) out.erase(0, 2);
  return out;
}

std::string_view basename(std::string_view path) {
  const auto slash = path.rfind('/');
  return slash == std::string_view::npos ? path : path.substr(slash + 1);
}

std::string file_extension(std::string_view path) {
  const auto base = basename(path);
  const auto dot = base.rfind('.');
  if (dot == std::string_view::npos) return {};
  std::string ext(base.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

bool is_char_boundary(std::string_view text, std::size_t offset) {
  if (offset > text.size()) return false;
  if (offset == 0 || offset == text.size()) return true;
  return (static_cast<unsigned char>(text[offset]) & 0xC0) != 0x80;
}

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      out.push_back('\n');
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

SourceDocument SourceDocument::make(std::string path, std::string text, std::size_t caret) {
  if (caret > text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "caret " + std::to_string(caret) + " beyond text of " + std::to_string(text.size()) + " bytes");
  }
  if (!is_char_boundary(text, caret)) {
    throw Error(ErrorCode::kInvalidArgument, "caret " + std::to_string(caret) + " splits a UTF-8 sequence");
  }
  SourceDocument doc;
  doc.path = normalize_path(path);
  const auto* profile = profile_for_extension(file_extension(doc.path));
  doc.language = profile ? profile->name : std::string{};
  doc.text = std::move(text);
  doc.caret = caret;
  return doc;
}

}  // namespace flcc
