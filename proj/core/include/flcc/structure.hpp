#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flcc/language_profile.hpp"

namespace flcc {

enum class BlockKind { kFunction, kMethod, kClass, kOther };

std::string_view to_string(BlockKind kind);

struct ByteRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  bool operator==(const ByteRange&) const = default;
};

struct CodeBlock {
  BlockKind kind = BlockKind::kOther;
  std::string declaration;     // signature line, trimmed and comment-free; empty for OTHER
  ByteRange body_span;         // from the first decorator (or declaration) to the end of the last body line
  bool contains_caret = false;
  std::vector<CodeBlock> children;  // METHOD blocks of a CLASS
};

// Top-level blocks are non-overlapping and ordered by offset; so are the
// children of each class.
struct FileStructure {
  std::vector<CodeBlock> blocks;

  // Innermost FUNCTION or METHOD containing the caret, if any.
  const CodeBlock* caret_function() const;

  // FUNCTION and METHOD blocks in file order, flattened.
  std::vector<const CodeBlock*> functions() const;
};

// Indentation-based scan of top-level def/class blocks and class-member defs.
// A block contains the caret when begin < caret <= end. Malformed indentation
// simply closes blocks early.
FileStructure extract_structure(std::string_view text, const LanguageProfile& profile,
                                std::size_t caret = std::string_view::npos);

}  // namespace flcc
