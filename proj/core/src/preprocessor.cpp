#include "flcc/preprocessor.hpp"

#include "flcc/error.hpp"
#include "flcc/sentinels.hpp"

namespace flcc {
namespace {

constexpr std::string_view kIndentChars = " \t\f";
constexpr std::string_view kSpaceChars = " \t\f\v\r";

std::string_view leading_indent(std::string_view line) {
  const auto end = line.find_first_not_of(kIndentChars);
  return end == std::string_view::npos ? line : line.substr(0, end);
}

// Trailing whitespace is dropped by formatting, so a backslash followed only by
// whitespace must already count as a line continuation.
bool only_space_after(std::string_view line, std::size_t pos) {
  return line.find_first_not_of(kSpaceChars, pos + 1) == std::string_view::npos;
}

// Carries string/bracket state from one physical line to the next.
class LineScanner {
 public:
  explicit LineScanner(const LanguageProfile& profile) : profile_(profile) {}

  // Returns the length of the code part of `line` (everything before a comment).
  std::size_t scan(std::string_view line) {
    std::size_t i = 0;
    const std::size_t n = line.size();
    bool escaped_eol = false;
    backslash_eol_ = false;
    while (i < n) {
      const char c = line[i];
      if (quote_ != '\0') {
        if (profile_.backslash_escapes && c == '\\') {
          if (only_space_after(line, i)) escaped_eol = true;
          i += 2;
          continue;
        }
        if (c == quote_) {
          if (!triple_) {
            quote_ = '\0';
          } else if (i + 2 < n && line[i + 1] == c && line[i + 2] == c) {
            quote_ = '\0';
            i += 3;
            continue;
          }
        }
        ++i;
        continue;
      }
      if (!profile_.line_comment.empty() && line.substr(i).starts_with(profile_.line_comment)) {
        return i;
      }
      if (profile_.quote_chars.find(c) != std::string_view::npos) {
        quote_ = c;
        triple_ = profile_.triple_quoted_strings && i + 2 < n && line[i + 1] == c && line[i + 2] == c;
        i += triple_ ? 3 : 1;
        continue;
      }
      if (profile_.open_brackets.find(c) != std::string_view::npos) {
        ++depth_;
      } else if (profile_.close_brackets.find(c) != std::string_view::npos) {
        if (depth_ > 0) --depth_;
      } else if (c == '\\' && only_space_after(line, i)) {
        backslash_eol_ = true;
      }
      ++i;
    }
    // Single-quoted strings end at the line terminator unless escaped.
    if (quote_ != '\0' && !triple_ && !escaped_eol) quote_ = '\0';
    return n;
  }

  bool inside_construct() const { return depth_ > 0 || quote_ != '\0' || backslash_eol_; }

 private:
  const LanguageProfile& profile_;
  char quote_ = '\0';
  bool triple_ = false;
  int depth_ = 0;
  bool backslash_eol_ = false;
};

struct IndentResolution {
  std::size_t pops = 0;
  bool push = false;
  bool mismatch = false;
};

IndentResolution resolve_indent(const std::vector<std::string_view>& stack, std::string_view ws) {
  IndentResolution r;
  while (stack.size() - r.pops > 1 && !ws.starts_with(stack[stack.size() - 1 - r.pops])) ++r.pops;
  const auto top = stack[stack.size() - 1 - r.pops];
  if (ws.size() > top.size()) {
    if (r.pops == 0) {
      r.push = true;
    } else {
      r.mismatch = true;
    }
  }
  return r;
}

class Renderer {
 public:
  explicit Renderer(FormattedCode& out) : out_(out) {}

  void scope(EventKind kind, std::size_t source_offset) {
    out_.rendered_offsets.push_back(out_.rendered.size());
    out_.events.push_back({kind, {}, source_offset});
    out_.rendered += kind == EventKind::kScopeIn ? kScopeInChar : kScopeOutChar;
  }

  void line(std::string_view content, std::size_t source_offset, bool terminate) {
    out_.rendered_offsets.push_back(out_.rendered.size());
    out_.events.push_back({EventKind::kLine, std::string(content), source_offset});
    out_.rendered += content;
    if (terminate) out_.rendered += '\n';
  }

 private:
  FormattedCode& out_;
};

}  // namespace

std::string_view trim_whitespace(std::string_view text) {
  const auto begin = text.find_first_not_of(kSpaceChars);
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(kSpaceChars);
  return text.substr(begin, end - begin + 1);
}

std::vector<PhysicalLine> scan_lines(std::string_view text, const LanguageProfile& profile) {
  std::vector<PhysicalLine> lines;
  LineScanner scanner(profile);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const bool terminated = nl != std::string_view::npos;
    const auto end = terminated ? nl : text.size();
    PhysicalLine line;
    line.offset = pos;
    line.raw = text.substr(pos, end - pos);
    line.terminated = terminated;
    line.continuation = scanner.inside_construct();
    line.code = line.raw.substr(0, scanner.scan(line.raw));
    lines.push_back(line);
    pos = terminated ? nl + 1 : text.size();
  }
  return lines;
}

std::string strip_comments(std::string_view text, const LanguageProfile& profile) {
  std::string out;
  out.reserve(text.size());
  for (const auto& line : scan_lines(text, profile)) {
    out += line.code;
    if (line.terminated) out += '\n';
  }
  return out;
}

FormattedCode format_code(std::string_view text, const FormatConfig& config) {
  FormattedCode out;
  out.tail_open = !text.empty() && text.back() != '\n';
  Renderer render(out);

  const auto lines = scan_lines(text, config.profile);
  std::vector<std::string_view> stack{std::string_view{}};
  const bool track_scopes = config.profile.indentation_sensitive;

  for (std::size_t index = 0; index < lines.size(); ++index) {
    const auto& line = lines[index];
    const auto body = config.strip_comments ? line.code : line.raw;
    const auto content = trim_whitespace(body);
    const bool is_tail = !line.terminated;
    const auto ws = leading_indent(body);

    if (content.empty()) {
      // A whitespace-only tail still tells where the caret sits, but only
      // unambiguous moves are emitted so the rendering stays restorable.
      if (is_tail && track_scopes && !line.continuation && !ws.empty()) {
        const auto r = resolve_indent(stack, ws);
        if (!r.mismatch) {
          for (std::size_t p = 0; p < r.pops; ++p) {
            stack.pop_back();
            render.scope(EventKind::kScopeOut, line.offset);
          }
          if (r.push) {
            stack.push_back(ws);
            render.scope(EventKind::kScopeIn, line.offset);
          }
        }
      }
      continue;
    }

    if (track_scopes && !line.continuation) {
      const auto r = resolve_indent(stack, ws);
      for (std::size_t p = 0; p < r.pops; ++p) {
        stack.pop_back();
        render.scope(EventKind::kScopeOut, line.offset);
      }
      if (r.push) {
        stack.push_back(ws);
        render.scope(EventKind::kScopeIn, line.offset);
      } else if (r.mismatch) {
        out.warnings.push_back({index + 1, "DEDENT_MISMATCH: indentation matches no open scope"});
      }
    }
    render.line(content, line.offset, !is_tail);
  }
  return out;
}

std::string restore_indentation(std::string_view rendered, const FormatConfig& config) {
  std::string out;
  out.reserve(rendered.size() * 2);
  std::size_t depth = 0;
  bool at_line_start = true;
  bool sentinel_since_newline = false;
  auto indent = [&] {
    for (std::size_t d = 0; d < depth; ++d) out += config.indent_unit;
  };

  std::size_t i = 0;
  while (i < rendered.size()) {
    const int s = sentinel_at(rendered, i);
    if (s == 0 || s == 1) {
      if (s == 0) {
        ++depth;
      } else {
        if (depth == 0) {
          throw Error(ErrorCode::kNegativeDepth,
                      "scope-out sentinel at byte " + std::to_string(i) + " closes an unopened scope");
        }
        --depth;
      }
      sentinel_since_newline = true;
      i += 3;
      continue;
    }
    const char c = rendered[i];
    if (c == '\n') {
      out += '\n';
      at_line_start = true;
      sentinel_since_newline = false;
    } else {
      if (at_line_start) {
        indent();
        at_line_start = false;
      }
      out += c;
    }
    ++i;
  }
  // An open tail that consisted only of scope moves: keep the caret's indentation.
  if (at_line_start && sentinel_since_newline) indent();
  return out;
}

std::string escape_sentinels(std::string_view rendered) {
  std::string out;
  out.reserve(rendered.size());
  for (std::size_t i = 0; i < rendered.size();) {
    const int s = sentinel_at(rendered, i);
    if (s == 0) {
      out += kScopeInDisplay;
      i += 3;
    } else if (s == 1) {
      out += kScopeOutDisplay;
      i += 3;
    } else {
      out += rendered[i++];
    }
  }
  return out;
}

std::string unescape_sentinels(std::string_view display) {
  std::string out;
  out.reserve(display.size());
  for (std::size_t i = 0; i < display.size();) {
    const auto rest = display.substr(i);
    if (rest.starts_with(kScopeInDisplay)) {
      out += kScopeInChar;
      i += kScopeInDisplay.size();
    } else if (rest.starts_with(kScopeOutDisplay)) {
      out += kScopeOutChar;
      i += kScopeOutDisplay.size();
    } else {
      out += display[i++];
    }
  }
  return out;
}

}  // namespace flcc
