#include <gtest/gtest.h>

#include "artgraph/diagnostics.hpp"
#include "artgraph/text_util.hpp"
#include "artgraph/types.hpp"

using namespace artgraph;

TEST(TextUtil, TrimAndNormalize)
{
    EXPECT_EQ(text::trim("  a b \n"), "a b");
    EXPECT_EQ(text::trim(""), "");
    EXPECT_EQ(text::normalize_ws("  x  >\n\t 0 "), "x > 0");
}

TEST(TextUtil, SplitLinesKeepsInnerEmptyLines)
{
    auto lines = text::split_lines("a\n\nb\n");
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[1], "");
    EXPECT_EQ(lines[2], "b");
    EXPECT_EQ(text::split_lines("x").size(), 1u);
}

TEST(TextUtil, Identifiers)
{
    EXPECT_TRUE(text::is_identifier("_a1"));
    EXPECT_FALSE(text::is_identifier("1a"));
    EXPECT_FALSE(text::is_identifier(""));
    EXPECT_TRUE(text::starts_with_word("int x", "int"));
    EXPECT_FALSE(text::starts_with_word("integer", "int"));
}

TEST(TextUtil, LineIndex)
{
    text::LineIndex idx("ab\ncd\n");
    EXPECT_EQ(idx.line_of(0), 1);
    EXPECT_EQ(idx.line_of(3), 2);
    EXPECT_EQ(idx.column_of(4), 2);
    EXPECT_EQ(idx.line_start(2), 3u);
}

TEST(TextUtil, Fnv1aKnownVectors)
{
    EXPECT_EQ(text::hex64(text::fnv1a64("")), "cbf29ce484222325");
    EXPECT_EQ(text::hex64(text::fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST(TextUtil, ReplaceWordSkipsLiteralsAndPartialWords)
{
    EXPECT_EQ(text::replace_word("n + nn + \"n\"", "n", "m"), "m + nn + \"n\"");
}

TEST(TextUtil, Utf8Sanitizing)
{
    EXPECT_EQ(text::sanitize_utf8("h\xC3\xA9"), "h\xC3\xA9");
    EXPECT_EQ(text::sanitize_utf8("\xC0\xAF"), "\xEF\xBF\xBD\xEF\xBF\xBD");
}

TEST(Types, NamesRoundTrip)
{
    for (auto l : {Language::C, Language::Java, Language::CSharp, Language::Dafny})
        EXPECT_EQ(language_from_name(to_string(l)), l);
    EXPECT_EQ(language_from_extension(".dfy"), Language::Dafny);
    EXPECT_EQ(extension_of(Language::CSharp), ".cs");
    EXPECT_EQ(category_from_name("mirror"), Category::Mirror);
    EXPECT_FALSE(variant_from_name("Correct"));
}

TEST(Diagnostics, MergeStampsFileAndSerializes)
{
    Diagnostics a;
    a.warn("x-code", "msg \"q\"", 3);
    Diagnostics b;
    b.merge(a, "f.c");
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b.warnings()[0].file, "f.c");
    EXPECT_EQ(b.count("x-code"), 1u);
    EXPECT_EQ(b.to_jsonl(), "{\"code\":\"x-code\",\"file\":\"f.c\",\"line\":3,\"message\":\"msg \\\"q\\\"\"}\n");
}
