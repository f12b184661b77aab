#include <gtest/gtest.h>

#include "artgraph/frontends.hpp"
#include "artgraph/specgen.hpp"

using namespace artgraph;

namespace {

std::size_t occurrences(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1))
        ++n;
    return n;
}

}  // namespace

TEST(GenDafny, MaxDualPostconditions)
{
    auto out = specgen::gen_dafny(
        "class P {\n    static int Max(int a, int b){ if (a > b) return a; else return b; }\n}\n");
    EXPECT_NE(out.find("method Max(a: int, b: int) returns (r: int)"), std::string::npos) << out;
    EXPECT_NE(out.find("ensures (a > b) ==> r == a"), std::string::npos) << out;
    EXPECT_NE(out.find("ensures !(a > b) ==> r == b"), std::string::npos) << out;
    EXPECT_EQ(occurrences(out, "ensures"), 2u);
}

TEST(GenDafny, FallThroughReturnCountsAsElse)
{
    auto out = specgen::gen_dafny(
        "class P {\n    static int Min(int a, int b) {\n        if (a < b) return a;\n        return b;\n    }\n}\n");
    EXPECT_NE(out.find("ensures (a < b) ==> r == a"), std::string::npos) << out;
    EXPECT_NE(out.find("ensures !(a < b) ==> r == b"), std::string::npos) << out;
}

TEST(GenDafny, WhileInvariantAndDecreases)
{
    auto out = specgen::gen_dafny(R"(class P {
    static int Count(int n) {
        int i = 0;
        while (i < n) {
            i = i + 1;
        }
        return i;
    }
}
)");
    EXPECT_NE(out.find("invariant i <= n"), std::string::npos) << out;
    EXPECT_NE(out.find("decreases n - i"), std::string::npos) << out;
    EXPECT_EQ(occurrences(out, "invariant"), 1u);
    EXPECT_EQ(occurrences(out, "decreases"), 1u);
}

TEST(GenDafny, VoidMethodWithoutBranchesHasNoEnsures)
{
    auto out = specgen::gen_dafny("class P {\n    static void Hello() {\n        Console.WriteLine(\"hi\");\n    }\n}\n");
    EXPECT_NE(out.find("method Hello()"), std::string::npos) << out;
    EXPECT_EQ(out.find("ensures"), std::string::npos);
    EXPECT_NE(out.find("print \"hi\", \"\\n\";"), std::string::npos) << out;
}

TEST(GenDafny, ParameterTypesSimplified)
{
    auto out = specgen::gen_dafny(
        "class P {\n    static double F(int[] xs, bool b, string s, double d) {\n        return d;\n    }\n}\n");
    EXPECT_NE(out.find("method F(xs: array<int>, b: bool, s: string, d: real) returns (r: real)"),
              std::string::npos)
        << out;
}

TEST(GenDafny, OutputParsesWithDafnyFrontend)
{
    auto out = specgen::gen_dafny(R"(class P {
    static int Max(int a, int b) {
        if (a > b) {
            return a;
        } else {
            return b;
        }
    }

    static int Sum(int[] a, int n) {
        int s = 0;
        for (int i = 0; i < n; i++) {
            s += a[i];
        }
        return s;
    }
}
)");
    auto parsed = frontend::parse_dafny(out);
    std::size_t ensures = 0;
    std::size_t invariants = 0;
    for (const auto& c : parsed.clauses) {
        ensures += c.kind == ClauseKind::Ensures;
        invariants += c.kind == ClauseKind::Invariant;
    }
    EXPECT_EQ(ensures, 2u) << out;
    EXPECT_EQ(invariants, 1u) << out;
}

TEST(GenDafny, UnsupportedStatementsAreNoted)
{
    auto out = specgen::gen_dafny("class P {\n    static void T() {\n        throw new Exception(\"x\");\n    }\n}\n");
    EXPECT_NE(out.find("// unsupported:"), std::string::npos) << out;
}

TEST(GenDafny, UnbalancedMethodSkippedWithWarning)
{
    Diagnostics d;
    auto out = specgen::gen_dafny("class P {\n    static int Good() { return 1; }\n    static int Bad() {\n", &d);
    EXPECT_NE(out.find("method Good()"), std::string::npos) << out;
    EXPECT_EQ(out.find("method Bad"), std::string::npos) << out;
    EXPECT_FALSE(d.empty());
}
