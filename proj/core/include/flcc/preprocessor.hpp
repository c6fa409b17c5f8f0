#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flcc/language_profile.hpp"

namespace flcc {

struct FormatConfig {
  std::string indent_unit = "    ";
  bool strip_comments = true;
  LanguageProfile profile = python_profile();
};

enum class EventKind { kLine, kScopeIn, kScopeOut };

struct FormatEvent {
  EventKind kind = EventKind::kLine;
  std::string content;            // LINE only; never empty, never padded
  std::size_t source_offset = 0;  // byte offset of the physical line that produced the event

  bool operator==(const FormatEvent& other) const {
    return kind == other.kind && content == other.content;
  }
};

struct FormatWarning {
  std::size_t line_number = 0;  // 1-based
  std::string message;
};

struct FormattedCode {
  std::vector<FormatEvent> events;
  std::vector<std::size_t> rendered_offsets;  // where each event starts in `rendered`
  std::string rendered;
  bool tail_open = false;
  std::vector<FormatWarning> warnings;
};

// One physical line as seen by the lexical scanner.
struct PhysicalLine {
  std::size_t offset = 0;     // start of the line in the scanned text
  std::string_view raw;       // without the terminating '\n'
  std::string_view code;      // raw with any trailing comment removed
  bool terminated = false;    // followed by '\n'
  bool continuation = false;  // starts inside brackets, a string, or after a '\'
};

// Splits text into lines, tracking string literals, brackets and comments
// across line boundaries. The returned views point into `text`.
std::vector<PhysicalLine> scan_lines(std::string_view text, const LanguageProfile& profile);

// Removes comments outside string literals, keeping line terminators.
std::string strip_comments(std::string_view text, const LanguageProfile& profile);

FormattedCode format_code(std::string_view text, const FormatConfig& config = {});

// Inverse of format_code's rendering: sentinels become indentation.
// Throws Error(kNegativeDepth) if a SCOPE_OUT would close a scope that was never opened.
std::string restore_indentation(std::string_view rendered, const FormatConfig& config = {});

// Sentinels <-> ⟨IN⟩/⟨OUT⟩ for terminal display.
std::string escape_sentinels(std::string_view rendered);
std::string unescape_sentinels(std::string_view display);

std::string_view trim_whitespace(std::string_view text);

}  // namespace flcc
