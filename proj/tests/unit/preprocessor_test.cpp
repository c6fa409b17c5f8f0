#include <gtest/gtest.h>

#include <random>

#include "flcc/error.hpp"
#include "flcc/preprocessor.hpp"
#include "flcc/sentinels.hpp"
#include "test_util.hpp"

namespace flcc {
namespace {

const std::string kIn(kScopeInChar);
const std::string kOut(kScopeOutChar);

FormatEvent line(std::string content) { return {EventKind::kLine, std::move(content), 0}; }
FormatEvent scope_in() { return {EventKind::kScopeIn, {}, 0}; }
FormatEvent scope_out() { return {EventKind::kScopeOut, {}, 0}; }

void expect_scope_balance(const FormattedCode& code) {
  long depth = 0;
  for (const auto& e : code.events) {
    if (e.kind == EventKind::kScopeIn) ++depth;
    if (e.kind == EventKind::kScopeOut) --depth;
    ASSERT_GE(depth, 0);
  }
}

TEST(StripComments, RemovesTrailingComment) {
  EXPECT_EQ(strip_comments("x = 1  # note\n", python_profile()), "x = 1  \n");
}

TEST(StripComments, KeepsHashInsideStrings) {
  EXPECT_EQ(strip_comments("s = \"# not a comment\"\n", python_profile()), "s = \"# not a comment\"\n");
  EXPECT_EQ(strip_comments("s = '# x'  # real\n", python_profile()), "s = '# x'  \n");
  EXPECT_EQ(strip_comments("s = \"\"\"a\n# inside\n\"\"\"  # out\n", python_profile()),
            "s = \"\"\"a\n# inside\n\"\"\"  \n");
  EXPECT_EQ(strip_comments("s = '''it's # fine'''\n", python_profile()), "s = '''it's # fine'''\n");
}

TEST(StripComments, EscapedQuotesDoNotCloseStrings) {
  EXPECT_EQ(strip_comments("s = \"a\\\"# b\"  # c\n", python_profile()), "s = \"a\\\"# b\"  \n");
}

TEST(StripComments, UnterminatedStringEndsAtLineBreak) {
  EXPECT_EQ(strip_comments("s = 'open # still string\nx = 1 # gone\n", python_profile()),
            "s = 'open # still string\nx = 1 \n");
}

TEST(StripComments, EmptyInput) { EXPECT_EQ(strip_comments("", python_profile()), ""); }

TEST(StripComments, CommentOnlyLineKeepsTerminator) {
  EXPECT_EQ(strip_comments("# header\nx = 1\n", python_profile()), "\nx = 1\n");
}

TEST(FormatCode, FunctionBody) {
  const auto f = format_code("def f():\n    return True\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("def f():"), scope_in(), line("return True")}));
  EXPECT_EQ(f.rendered, "def f():\n" + kIn + "return True\n");
  EXPECT_FALSE(f.tail_open);
}

TEST(FormatCode, BlankLinesRemoved) {
  const auto f = format_code("x = 1\n\n\ny = 2\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("x = 1"), line("y = 2")}));
  EXPECT_EQ(f.rendered, "x = 1\ny = 2\n");
}

TEST(FormatCode, EmptyInput) {
  const auto f = format_code("");
  EXPECT_TRUE(f.events.empty());
  EXPECT_FALSE(f.tail_open);
  EXPECT_EQ(f.rendered, "");
}

TEST(FormatCode, DedentPopsEveryClosedLevel) {
  const auto f = format_code("class A:\n    def f(self):\n        pass\nx = 1\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("class A:"), scope_in(), line("def f(self):"), scope_in(),
                                                line("pass"), scope_out(), scope_out(), line("x = 1")}));
}

TEST(FormatCode, CommentsAndTrailingWhitespaceRemoved) {
  const auto f = format_code("x = 1  # note\n# only comment\ny = 2   \n");
  EXPECT_EQ(f.rendered, "x = 1\ny = 2\n");
}

TEST(FormatCode, KeepCommentsWhenDisabled) {
  FormatConfig config;
  config.strip_comments = false;
  EXPECT_EQ(format_code("x = 1  # note\n", config).rendered, "x = 1  # note\n");
}

TEST(FormatCode, BracketContinuationOpensNoScope) {
  const auto f = format_code("x = call(\n        a,\n    b)\ny = 2\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("x = call("), line("a,"), line("b)"), line("y = 2")}));
}

TEST(FormatCode, TripleQuotedStringLinesOpenNoScope) {
  const auto f = format_code("def f():\n    \"\"\"Doc\n        more\n    \"\"\"\n    return 1\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("def f():"), scope_in(), line("\"\"\"Doc"), line("more"),
                                                line("\"\"\""), line("return 1")}));
}

TEST(FormatCode, BackslashContinuation) {
  const auto f = format_code("x = 1 + \\\n        2\ny = 3\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("x = 1 + \\"), line("2"), line("y = 3")}));
}

TEST(FormatCode, DedentMismatchIsBestEffort) {
  const auto f = format_code("if x:\n        a = 1\n    b = 2\nc = 3\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("if x:"), scope_in(), line("a = 1"), scope_out(),
                                                line("b = 2"), line("c = 3")}));
  ASSERT_EQ(f.warnings.size(), 1u);
  EXPECT_EQ(f.warnings[0].line_number, 3u);
  expect_scope_balance(f);
}

TEST(FormatCode, MixedTabsAndSpacesUsePrefixRelation) {
  const auto f = format_code("if x:\n\ta = 1\n\t    b = 2\n    c = 3\n");
  EXPECT_EQ(f.events, (std::vector<FormatEvent>{line("if x:"), scope_in(), line("a = 1"), scope_in(), line("b = 2"),
                                                scope_out(), scope_out(), line("c = 3")}));
  EXPECT_EQ(f.warnings.size(), 1u);
}

TEST(FormatCode, OpenTailHasNoTerminator) {
  const auto f = format_code("def f():\n    return Tr");
  EXPECT_TRUE(f.tail_open);
  EXPECT_EQ(f.rendered, "def f():\n" + kIn + "return Tr");
}

TEST(FormatCode, WhitespaceOnlyTailReportsScope) {
  const auto f = format_code("def f():\n    ");
  EXPECT_TRUE(f.tail_open);
  EXPECT_EQ(f.rendered, "def f():\n" + kIn);
  const auto g = format_code("class A:\n    def f(self):\n        pass\n    ");
  EXPECT_EQ(g.rendered, "class A:\n" + kIn + "def f(self):\n" + kIn + "pass\n" + kOut);
}

TEST(FormatCode, TrailingSpaceBeforeCaretIsDropped) {
  EXPECT_EQ(format_code("x = ").rendered, "x =");
}

TEST(FormatCode, EventOffsetsPointAtSourceLines) {
  const std::string text = "a = 1\n\ndef f():\n    pass\n";
  const auto f = format_code(text);
  ASSERT_EQ(f.events.size(), 4u);
  EXPECT_EQ(f.events[1].source_offset, text.find("def"));
  EXPECT_EQ(f.events[3].source_offset, text.find("pass") - 4);
  EXPECT_EQ(f.rendered.substr(f.rendered_offsets[3]), "pass\n");
}

TEST(RestoreIndentation, InvertsFormat) {
  EXPECT_EQ(restore_indentation("def f():\n" + kIn + "return True\n"), "def f():\n    return True\n");
}

TEST(RestoreIndentation, ZeroDepthIdentity) { EXPECT_EQ(restore_indentation("x = 1\n"), "x = 1\n"); }

TEST(RestoreIndentation, BalancedEmptyScopes) { EXPECT_EQ(restore_indentation(kIn + kOut), ""); }

TEST(RestoreIndentation, CustomIndentUnit) {
  FormatConfig config;
  config.indent_unit = "\t";
  EXPECT_EQ(restore_indentation("a:\n" + kIn + "b:\n" + kIn + "c\n" + kOut + kOut + "d\n", config),
            "a:\n\tb:\n\t\tc\nd\n");
}

TEST(RestoreIndentation, NegativeDepthThrows) {
  try {
    restore_indentation("x\n" + kOut + "y\n");
    FAIL() << "expected NEGATIVE_DEPTH";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeDepth);
  }
}

TEST(Sentinels, EscapeRoundTrip) {
  const std::string rendered = "a:\n" + kIn + "b\n" + kOut;
  EXPECT_EQ(escape_sentinels(rendered), "a:\n⟨IN⟩b\n⟨OUT⟩");
  EXPECT_EQ(unescape_sentinels(escape_sentinels(rendered)), rendered);
}

// Properties over generated programs.

TEST(FormatProperties, IdempotentThroughRestore) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto text = testing::generate_program(seed, "    ");
    const auto once = format_code(text);
    const auto again = format_code(restore_indentation(once.rendered));
    ASSERT_EQ(again.rendered, once.rendered) << "seed " << seed;
    expect_scope_balance(once);
  }
}

TEST(FormatProperties, IndentWidthIndependent) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto four = format_code(testing::generate_program(seed, "    "));
    const auto two = format_code(testing::generate_program(seed, "  "));
    const auto tab = format_code(testing::generate_program(seed, "\t"));
    ASSERT_EQ(four.events, two.events) << "seed " << seed;
    ASSERT_EQ(four.events, tab.events) << "seed " << seed;
  }
}

TEST(FormatProperties, LineContentNeverPadded) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (const auto& e : format_code(testing::generate_program(seed, "  ")).events) {
      if (e.kind != EventKind::kLine) continue;
      ASSERT_FALSE(e.content.empty());
      ASSERT_NE(e.content.front(), ' ');
      ASSERT_NE(e.content.front(), '\t');
      ASSERT_NE(e.content.back(), ' ');
      ASSERT_NE(e.content.back(), '\t');
    }
  }
}

TEST(FormatProperties, SentinelsOnlyAtScopeEvents) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto f = format_code(testing::generate_program(seed, "    "));
    std::size_t sentinels = 0;
    for (std::size_t i = 0; i < f.rendered.size(); ++i) sentinels += sentinel_at(f.rendered, i) >= 0;
    std::size_t scopes = 0;
    for (const auto& e : f.events) scopes += e.kind != EventKind::kLine;
    ASSERT_EQ(sentinels, scopes);
  }
}

TEST(StripCommentsProperties, StringLiteralBytesUntouched) {
  std::mt19937_64 rng(7);
  const std::string alphabet = "ab #'\\";
  for (int trial = 0; trial < 1000; ++trial) {
    std::string literal;
    const auto len = rng() % 12;
    for (std::size_t i = 0; i < len; ++i) {
      char c = alphabet[rng() % alphabet.size()];
      if (c == '\\' || c == '\'') c = '#';
      literal += c;
    }
    const auto quote = (rng() % 2) ? std::string("\"") : std::string("\"\"\"");
    const auto stmt = "v = " + quote + literal + quote;
    const auto text = stmt + "  # trailing\nw = 2\n";
    ASSERT_EQ(strip_comments(text, python_profile()), stmt + "  \nw = 2\n") << text;
  }
}

TEST(FormatFixtures, RoundTripOnEveryFixtureFile) {
  for (const auto& file : testing::fixture_corpus()) {
    const auto once = format_code(file.text);
    ASSERT_EQ(format_code(restore_indentation(once.rendered)).rendered, once.rendered) << file.path;
    expect_scope_balance(once);
  }
}

}  // namespace
}  // namespace flcc
