#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace flcc {

// Lexical description the preprocessor needs for one language. Only the
// Python profile ships; other languages can be described by filling one in.
struct LanguageProfile {
  std::string name;
  std::vector<std::string> extensions;
  std::string line_comment;       // empty: no line comments
  std::string quote_chars;        // characters that open a string literal
  bool triple_quoted_strings = false;
  bool backslash_escapes = true;
  std::string open_brackets;
  std::string close_brackets;     // same order as open_brackets
  bool indentation_sensitive = false;
};

const LanguageProfile& python_profile();

// Returns nullptr when no shipped profile claims the extension.
const LanguageProfile* profile_for_extension(std::string_view extension);

}  // namespace flcc
