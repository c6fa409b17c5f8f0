#include "flcc/language_profile.hpp"

#include <algorithm>

namespace flcc {

const LanguageProfile& python_profile() {
  static const LanguageProfile profile{
      .name = "python",
      .extensions = {"py", "pyi", "pyw"},
      .line_comment = "#",
      .quote_chars = "'\"",
      .triple_quoted_strings = true,
      .backslash_escapes = true,
      .open_brackets = "([{",
      .close_brackets = ")]}",
      .indentation_sensitive = true,
  };
  return profile;
}

const LanguageProfile* profile_for_extension(std::string_view extension) {
  const auto& py = python_profile();
  if (std::find(py.extensions.begin(), py.extensions.end(), extension) != py.extensions.end()) {
    return &py;
  }
  return nullptr;
}

}  // namespace flcc
