#include <gtest/gtest.h>

#include "artgraph/frontends.hpp"
#include "tree_shape.hpp"

using namespace artgraph;
using artgraph::testing::find_kind;
using artgraph::testing::shape;

TEST(ParseC, EmptySourceIsBareFile)
{
    auto t = frontend::parse_c("");
    EXPECT_EQ(t.kind, "FILE");
    EXPECT_TRUE(t.children.empty());
    EXPECT_EQ(t.node_count(), 1u);
}

TEST(ParseC, IncrementFunctionTree)
{
    auto t = frontend::parse_c("int f(int x){ return x+1; }");
    EXPECT_EQ(shape(t),
              "FILE \"\"\n"
              "  FUNCTION_DECL \"f\"\n"
              "    VAR_DECL \"x\"\n"
              "    COMPOUND_STMT \"\"\n"
              "      RETURN_STMT \"\"\n"
              "        BINARY_OPERATOR \"+\"\n"
              "          DECL_REF_EXPR \"x\"\n"
              "          INTEGER_LITERAL \"1\"\n");
}

TEST(ParseC, DeclarationInsideBody)
{
    auto t = frontend::parse_c("void g(void) {\n    int i = 0;\n}\n");
    const SyntaxTree* decl = find_kind(t, "DECL_STMT");
    ASSERT_NE(decl, nullptr);
    ASSERT_EQ(decl->children.size(), 1u);
    EXPECT_EQ(decl->children[0].kind, "VAR_DECL");
    EXPECT_EQ(decl->children[0].label, "i");
    EXPECT_EQ(decl->span.line, 2);
    EXPECT_EQ(decl->span.column, 5);
}

TEST(ParseC, ControlFlowKinds)
{
    auto t = frontend::parse_c(R"(int h(int n) {
    int s = 0;
    for (int i = 0; i < n; i++) {
        if (i % 2 == 0) { s += i; } else { continue; }
    }
    while (n > 0) n--;
    do { s++; } while (s < 3);
    switch (s) { case 1: break; default: s = 0; }
    return s;
}
)");
    for (auto k : {"FOR_STMT", "IF_STMT", "WHILE_STMT", "DO_STMT", "SWITCH_STMT", "CASE_STMT", "DEFAULT_STMT",
                   "CONTINUE_STMT", "BREAK_STMT", "RETURN_STMT"})
        EXPECT_NE(find_kind(t, k), nullptr) << k;
}

TEST(ParseC, CallsSubscriptsAndLiterals)
{
    auto t = frontend::parse_c("void p(int a[]) { printf(\"%d\\n\", a[2]); a[0] = 'x'; }");
    const SyntaxTree* call = find_kind(t, "CALL_EXPR");
    ASSERT_NE(call, nullptr);
    EXPECT_EQ(call->label, "printf");
    EXPECT_NE(find_kind(t, "ARRAY_SUBSCRIPT_EXPR"), nullptr);
    EXPECT_NE(find_kind(t, "STRING_LITERAL"), nullptr);
    EXPECT_NE(find_kind(t, "CHARACTER_LITERAL"), nullptr);
}

TEST(ParseC, StructDeclaration)
{
    auto t = frontend::parse_c("struct Point { int x; int y; };\n");
    const SyntaxTree* s = find_kind(t, "STRUCT_DECL");
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(s->label, "Point");
    EXPECT_EQ(s->children.size(), 2u);
}

TEST(ParseC, UnbalancedBracesRaise)
{
    EXPECT_THROW(frontend::parse_c("int f() { if (x) { return 1; }"), frontend::ParseError);
}

TEST(ParseC, AnnotationCommentsAreIgnored)
{
    auto plain = frontend::parse_c("int f(int x){ return x; }");
    auto annotated = frontend::parse_c("/*@ ensures \\result == x; */\nint f(int x){ return x; }");
    EXPECT_EQ(shape(plain), shape(annotated));
}

TEST(ParseC, CanonicalFormIsStable)
{
    const char* src = "int f(int x){ return x+1; }";
    EXPECT_EQ(frontend::parse_c(src).canonical(), frontend::parse_c(src).canonical());
    EXPECT_TRUE(frontend::parse_c(src).canonical().starts_with("FILE \"\" 1:1\n  FUNCTION_DECL \"f\" 1:1\n"));
}

TEST(ParseC, AllKindsAreDocumented)
{
    auto t = frontend::parse_c(R"(#include <stdio.h>
typedef int num;
enum Color { RED, GREEN };
struct P { int x; };
int main(void) {
    struct P p;
    int *q = &p.x;
    double d = (double) sizeof(int);
    char c = 'a';
    const char *s = "s";
    int k = d > 1.5 ? 1 : 0;
    label: k++;
    ;
    return p.x + *q;
}
)");
    t.walk([](const SyntaxTree& n, int) { EXPECT_TRUE(kinds::is_known(n.kind)) << n.kind; });
}
