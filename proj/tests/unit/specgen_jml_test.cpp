#include <gtest/gtest.h>

#include "artgraph/frontends.hpp"
#include "artgraph/specgen.hpp"

using namespace artgraph;

namespace {

std::size_t count_kind(const specgen::GenResult& r, ClauseKind k)
{
    std::size_t n = 0;
    for (const auto& c : r.all_clauses())
        n += c.kind == k;
    return n;
}

}  // namespace

TEST(GenJml, NumericFieldInvariant)
{
    auto r = specgen::gen_jml("public class Counter {\n    int count;\n}\n");
    EXPECT_NE(r.text.find("//@ public invariant count >= 0;"), std::string::npos) << r.text;
}

TEST(GenJml, ReferenceParameterRequiresNonNull)
{
    auto r = specgen::gen_jml("public class F {\n    static int find(String s) {\n        return 0;\n    }\n}\n");
    EXPECT_NE(r.text.find("//@ requires s != null;"), std::string::npos) << r.text;
}

TEST(GenJml, ParameterlessVoidMethodOnlyAssignable)
{
    auto r = specgen::gen_jml("public class V {\n    void run() {\n    }\n}\n");
    ASSERT_EQ(r.clause_count(), 1u) << r.text;
    EXPECT_EQ(r.all_clauses()[0].kind, ClauseKind::Assignable);
    EXPECT_NE(r.text.find("    //@ assignable \\everything;\n    void run() {"), std::string::npos) << r.text;
}

TEST(GenJml, FieldKindsAndPlacement)
{
    auto r = specgen::gen_jml(R"(public class Account {
    int balance;
    boolean open;
    String owner;

    void rename(String name) {
        owner = name;
    }
}
)");
    EXPECT_EQ(count_kind(r, ClauseKind::Invariant), 3u);
    EXPECT_EQ(count_kind(r, ClauseKind::Requires), 1u);
    EXPECT_EQ(count_kind(r, ClauseKind::Assignable), 1u);
    EXPECT_EQ(count_kind(r, ClauseKind::Ensures), 0u);
    EXPECT_NE(r.text.find("public class Account {\n    //@ public invariant balance >= 0;\n"), std::string::npos)
        << r.text;
    EXPECT_NE(r.text.find("//@ public invariant open == true || open == false;"), std::string::npos);
    EXPECT_NE(r.text.find("//@ public invariant owner != null;"), std::string::npos);
}

TEST(GenJml, SizeLikeMethodGetsResultEnsures)
{
    auto r = specgen::gen_jml("public class L {\n    int size() {\n        return 0;\n    }\n}\n");
    EXPECT_NE(r.text.find("//@ ensures \\result >= 0;"), std::string::npos) << r.text;
}

TEST(GenJml, PreprocessorLinesRemoved)
{
    auto r = specgen::gen_jml("#include <stdio.h>\npublic class P {\n}\n");
    EXPECT_EQ(r.text.find("#include"), std::string::npos);
}

TEST(GenJml, ClausesParseBackInOrder)
{
    auto r = specgen::gen_jml(R"(public class Account {
    int balance;
    String owner;

    static int find(String s, int[] xs) {
        return 0;
    }
}
)");
    auto back = frontend::extract_annotations(r.text, Dialect::JML);
    auto emitted = r.all_clauses();
    ASSERT_EQ(back.size(), emitted.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].kind, emitted[i].kind) << i;
        EXPECT_EQ(back[i].text, emitted[i].text) << i;
    }
}

TEST(GenJml, Idempotent)
{
    auto once = specgen::gen_jml("public class C {\n    int n;\n    void f(String s) {\n    }\n}\n");
    EXPECT_EQ(specgen::gen_jml(once.text).text, once.text);
}
