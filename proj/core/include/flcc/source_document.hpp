#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace flcc {

// A file at the moment completion is invoked. The caret is a byte offset.
struct SourceDocument {
  std::string path;      // project-relative, '/'-separated
  std::string language;  // "python", or empty when unknown
  std::string text;
  std::size_t caret = 0;

  // Normalizes the path, infers the language from the extension and checks
  // that the caret lies on a UTF-8 character boundary within the text.
  // Throws Error(kInvalidArgument) otherwise.
  static SourceDocument make(std::string path, std::string text, std::size_t caret);

  std::string_view text_before_caret() const { return std::string_view(text).substr(0, caret); }
};

std::string normalize_path(std::string_view path);

// Substring after the final '.' of the basename, lowercased; "" if none.
std::string file_extension(std::string_view path);

std::string_view basename(std::string_view path);

bool is_char_boundary(std::string_view text, std::size_t offset);

// "\r\n" and lone "\r" become "\n".
std::string normalize_newlines(std::string_view text);

}  // namespace flcc
