#include "flcc/structure.hpp"

#include <optional>

#include "flcc/preprocessor.hpp"

namespace flcc {
namespace {

struct Statement {
  std::string_view indent;
  std::string_view content;
  std::size_t begin = 0;  // start of the physical line
  std::size_t end = 0;    // end of the last physical line it spans, before '\n'
};

std::vector<Statement> collect_statements(std::string_view text, const LanguageProfile& profile) {
  std::vector<Statement> out;
  for (const auto& line : scan_lines(text, profile)) {
    const auto content = trim_whitespace(line.code);
    if (line.continuation) {
      if (!out.empty()) out.back().end = line.offset + line.raw.size();
      continue;
    }
    if (content.empty()) continue;
    const auto ws_end = line.code.find_first_not_of(" \t\f");
    out.push_back({line.code.substr(0, ws_end), content, line.offset, line.offset + line.raw.size()});
  }
  return out;
}

bool starts_word(std::string_view content, std::string_view keyword) {
  return content.starts_with(keyword) && content.size() > keyword.size() &&
         (content[keyword.size()] == ' ' || content[keyword.size()] == '\t');
}

bool is_def(std::string_view content) {
  if (starts_word(content, "def")) return true;
  if (starts_word(content, "async")) return is_def(trim_whitespace(content.substr(5)));
  return false;
}

bool is_class(std::string_view content) { return starts_word(content, "class"); }

bool nested_under(const Statement& inner, const Statement& outer) {
  return inner.indent.size() > outer.indent.size() && inner.indent.starts_with(outer.indent);
}

// Last statement index belonging to the block opened at `head`, bounded by `limit`.
std::size_t block_last(const std::vector<Statement>& st, std::size_t head, std::size_t limit) {
  std::size_t last = head;
  while (last + 1 < limit && nested_under(st[last + 1], st[head])) ++last;
  return last;
}

// Scans statements [first, limit) whose indentation equals st[first].indent.
// Functions become `function_kind`; classes recurse one level when allowed.
std::vector<CodeBlock> scan_level(const std::vector<Statement>& st, std::size_t first, std::size_t limit,
                                  BlockKind function_kind, bool allow_classes, bool emit_other) {
  std::vector<CodeBlock> blocks;
  if (first >= limit) return blocks;
  const auto level = st[first].indent;
  std::size_t i = first;
  std::optional<CodeBlock> other;
  auto flush_other = [&] {
    if (other) blocks.push_back(std::move(*other));
    other.reset();
  };

  while (i < limit) {
    const auto& s = st[i];
    if (s.indent != level) {
      // Deeper (or malformed) statement outside any recognised block.
      if (emit_other) {
        if (!other) other = CodeBlock{BlockKind::kOther, {}, {s.begin, s.end}, false, {}};
        other->body_span.end = s.end;
      }
      ++i;
      continue;
    }
    std::size_t head = i;
    while (head < limit && st[head].indent == level && st[head].content.starts_with('@')) ++head;
    const bool has_head = head < limit && st[head].indent == level;
    const bool is_block = has_head && (is_def(st[head].content) || (allow_classes && is_class(st[head].content)));
    if (!is_block) {
      // Decorators not followed by a def are ordinary code.
      const auto upto = head == i ? i + 1 : head;
      if (emit_other) {
        for (std::size_t k = i; k < upto; ++k) {
          if (!other) other = CodeBlock{BlockKind::kOther, {}, {st[k].begin, st[k].end}, false, {}};
          other->body_span.end = st[k].end;
        }
      }
      i = upto;
      continue;
    }
    flush_other();
    const auto last = block_last(st, head, limit);
    CodeBlock block;
    block.declaration = std::string(st[head].content);
    block.body_span = {st[i].begin, st[last].end};
    if (is_class(st[head].content)) {
      block.kind = BlockKind::kClass;
      block.children = scan_level(st, head + 1, last + 1, BlockKind::kMethod, false, false);
    } else {
      block.kind = function_kind;
    }
    blocks.push_back(std::move(block));
    i = last + 1;
  }
  flush_other();
  return blocks;
}

void mark_caret(std::vector<CodeBlock>& blocks, std::size_t caret) {
  for (auto& b : blocks) {
    b.contains_caret = b.body_span.begin < caret && caret <= b.body_span.end;
    mark_caret(b.children, caret);
  }
}

}  // namespace

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::kFunction: return "FUNCTION";
    case BlockKind::kMethod: return "METHOD";
    case BlockKind::kClass: return "CLASS";
    case BlockKind::kOther: return "OTHER";
  }
  return "OTHER";
}

const CodeBlock* FileStructure::caret_function() const {
  for (const auto& b : blocks) {
    if (!b.contains_caret) continue;
    if (b.kind == BlockKind::kFunction) return &b;
    for (const auto& c : b.children) {
      if (c.contains_caret) return &c;
    }
  }
  return nullptr;
}

std::vector<const CodeBlock*> FileStructure::functions() const {
  std::vector<const CodeBlock*> out;
  for (const auto& b : blocks) {
    if (b.kind == BlockKind::kFunction) out.push_back(&b);
    for (const auto& c : b.children) {
      if (c.kind == BlockKind::kMethod) out.push_back(&c);
    }
  }
  return out;
}

FileStructure extract_structure(std::string_view text, const LanguageProfile& profile, std::size_t caret) {
  FileStructure fs;
  const auto statements = collect_statements(text, profile);
  fs.blocks = scan_level(statements, 0, statements.size(), BlockKind::kFunction, true, true);
  if (caret != std::string_view::npos) mark_caret(fs.blocks, caret);
  return fs;
}

}  // namespace flcc
