#pragma once

#include <string_view>

namespace flcc {

// Private-use codepoints that carry special tokens through plain strings.
// SCOPE_IN/SCOPE_OUT are fixed at U+E000/U+E001 so vocabularies stay portable.
inline constexpr std::string_view kScopeInChar = "\xEE\x80\x80";      // U+E000
inline constexpr std::string_view kScopeOutChar = "\xEE\x80\x81";     // U+E001
inline constexpr std::string_view kLangSepChar = "\xEE\x80\x82";      // U+E002
inline constexpr std::string_view kMetaInfoSepChar = "\xEE\x80\x83";  // U+E003

// Human-readable stand-ins used by the CLI.
inline constexpr std::string_view kScopeInDisplay = "\xE2\x9F\xA8IN\xE2\x9F\xA9";    // ⟨IN⟩
inline constexpr std::string_view kScopeOutDisplay = "\xE2\x9F\xA8OUT\xE2\x9F\xA9";  // ⟨OUT⟩

// Index 0..3 of the sentinel starting at text[pos], or -1.
inline int sentinel_at(std::string_view text, std::size_t pos) {
  if (pos + 3 > text.size()) return -1;
  if (text[pos] != '\xEE' || text[pos + 1] != '\x80') return -1;
  const auto last = static_cast<unsigned char>(text[pos + 2]);
  if (last < 0x80 || last > 0x83) return -1;
  return last - 0x80;
}

}  // namespace flcc
