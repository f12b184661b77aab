#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "artgraph/corpus.hpp"
#include "artgraph/frontends.hpp"
#include "artgraph/graph.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace artgraph;
using graph::EdgeLabel;

namespace {

const graph::GraphNode* first_of_kind(const graph::ArtifactGraph& g, std::string_view kind)
{
    for (const auto& n : g.nodes())
        if (n.kind == kind)
            return &n;
    return nullptr;
}

std::vector<const graph::GraphEdge*> edges_into(const graph::ArtifactGraph& g, const std::string& id)
{
    std::vector<const graph::GraphEdge*> out;
    for (const auto& e : g.edges())
        if (e.target == id)
            out.push_back(&e);
    return out;
}

graph::ArtifactGraph c_graph(const std::string& src, const std::string& origin = "t.c")
{
    return graph::build_graph(frontend::parse_c(src), frontend::extract_annotations(src, Dialect::ACSL), origin);
}

}  // namespace

TEST(BuildGraph, DeclarationLinksToVariable)
{
    auto g = c_graph("void f(void) {\n    int i = 0;\n}\n");
    const auto* decl = first_of_kind(g, "DECL_STMT");
    const auto* var = first_of_kind(g, "VAR_DECL");
    ASSERT_NE(decl, nullptr);
    ASSERT_NE(var, nullptr);
    EXPECT_EQ(var->label, "i");
    bool linked = false;
    for (const auto& e : g.edges())
        linked = linked || (e.source == decl->id && e.target == var->id && e.label == EdgeLabel::AstChild);
    EXPECT_TRUE(linked);
}

TEST(BuildGraph, EmptyFileIsRootOnly)
{
    auto g = graph::build_graph(frontend::parse_c(""), {}, "e.c");
    EXPECT_EQ(g.nodes().size(), 1u);
    EXPECT_EQ(g.edges().size(), 0u);
    EXPECT_EQ(g.nodes()[0].label, "FILE");
    EXPECT_EQ(g.root(), g.nodes()[0].id);
}

TEST(BuildGraph, TwoClausesTwoSpecNodes)
{
    auto g = c_graph("/*@ requires x > 0;\n    ensures \\result == x; */\nint id(int x) { return x; }\n");
    EXPECT_EQ(g.count_kind("SPEC_CLAUSE"), 2u);
    const auto* fn = first_of_kind(g, "FUNCTION_DECL");
    ASSERT_NE(fn, nullptr);
    for (const auto& n : g.nodes()) {
        if (n.kind != "SPEC_CLAUSE")
            continue;
        auto in = edges_into(g, n.id);
        ASSERT_EQ(in.size(), 1u);
        EXPECT_EQ(in[0]->label, EdgeLabel::Spec);
        EXPECT_EQ(in[0]->source, fn->id);
    }
}

TEST(BuildGraph, SpecLabelAndIdFormat)
{
    auto g = c_graph("/*@ ensures \\result == 1; */\nint one(void) { return 1; }\n");
    const auto* spec = first_of_kind(g, "SPEC_CLAUSE");
    ASSERT_NE(spec, nullptr);
    EXPECT_EQ(spec->label, "ensures: \\result == 1");
    EXPECT_TRUE(spec->id.starts_with("SPEC_CLAUSE:1:")) << spec->id;
    EXPECT_EQ(g.nodes()[0].id, "FILE:1:1:0");
}

TEST(BuildGraph, LoopClauseAttachesToLoop)
{
    auto g = c_graph(
        "void z(int a[], int n) {\n    /*@ loop invariant 0 <= i <= n; */\n    for (int i = 0; i < n; i++) a[i] = 0;\n}\n");
    const auto* loop = first_of_kind(g, "FOR_STMT");
    const auto* spec = first_of_kind(g, "SPEC_CLAUSE");
    ASSERT_NE(loop, nullptr);
    ASSERT_NE(spec, nullptr);
    EXPECT_EQ(edges_into(g, spec->id).at(0)->source, loop->id);
}

TEST(BuildGraph, UnmatchedClauseFallsBackToRoot)
{
    std::vector<SpecClause> cs(1);
    cs[0].kind = ClauseKind::Requires;
    cs[0].text = "true";
    cs[0].attach = AttachTarget{AttachKind::Function, "missing", 7};
    auto g = graph::build_graph(frontend::parse_c("int f(void) { return 0; }"), cs, "x.c");
    const auto* spec = first_of_kind(g, "SPEC_CLAUSE");
    ASSERT_NE(spec, nullptr);
    EXPECT_EQ(edges_into(g, spec->id).at(0)->source, g.root());
}

TEST(BuildGraph, DafnyMethodWithTwoClauses)
{
    auto g = graph::build_dafny_graph(
        "method increment(x: int) returns (r: int)\n  requires x > 0\n  ensures r == x + 1\n{\n  r := x + 1;\n}\n",
        "inc.dfy");
    const auto* m = first_of_kind(g, "METHOD_DECL");
    ASSERT_NE(m, nullptr);
    std::size_t spec_children = 0;
    for (const auto& e : g.edges())
        spec_children += e.source == m->id && e.label == EdgeLabel::Spec;
    EXPECT_EQ(spec_children, 2u);
}

TEST(BuildGraph, DafnyEmptyFileIsRootOnly)
{
    auto g = graph::build_dafny_graph("", "e.dfy");
    EXPECT_EQ(g.nodes().size(), 1u);
    EXPECT_TRUE(g.edges().empty());
}

TEST(BuildGraph, DafnyWhileInvariantSpecEdge)
{
    auto g = graph::build_dafny_graph(
        "method S(n: int)\n{\n  var i := 0;\n  while i < n\n    invariant i <= n\n  {\n    i := i + 1;\n  }\n}\n", "s.dfy");
    const auto* w = first_of_kind(g, "WHILE_STMT");
    ASSERT_NE(w, nullptr);
    std::size_t spec = 0;
    for (const auto& e : g.edges())
        spec += e.source == w->id && e.label == EdgeLabel::Spec;
    EXPECT_EQ(spec, 1u);
}

TEST(BuildGraph, CountsMatchHandCountedFixture)
{
    fs::path dir = artgraph::testing::data_dir() / "fixtures/graphs";
    std::ifstream expected(dir / "expected.tsv");
    std::string line;
    std::size_t files = 0;
    while (std::getline(expected, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        std::string file;
        std::size_t tree_nodes = 0;
        std::size_t clauses = 0;
        row >> file >> tree_nodes >> clauses;
        std::string src = corpus::read_file(dir / file);
        auto tree = frontend::parse_c(src);
        auto cs = frontend::extract_annotations(src, Dialect::ACSL);
        EXPECT_EQ(tree.node_count(), tree_nodes) << file;
        EXPECT_EQ(cs.size(), clauses) << file;
        auto g = graph::build_graph(tree, cs, file);
        EXPECT_EQ(g.nodes().size(), tree_nodes + clauses) << file;
        EXPECT_EQ(g.count_edges(EdgeLabel::AstChild), tree_nodes - 1) << file;
        EXPECT_EQ(g.count_edges(EdgeLabel::Spec), clauses) << file;
        ++files;
    }
    EXPECT_EQ(files, 10u);
}

TEST(BuildGraph, AddEdgeRejectsUnknownNodes)
{
    graph::ArtifactGraph g;
    g.add_node({"a", "FILE", "FILE"});
    EXPECT_THROW(g.add_edge("a", "b", EdgeLabel::AstChild), graph::GraphError);
    EXPECT_THROW(g.add_node({"a", "FILE", "FILE"}), graph::GraphError);
}

TEST(Linearize, SingleNode)
{
    auto g = graph::build_graph(frontend::parse_c(""), {}, "e.c");
    EXPECT_EQ(graph::linearize(g), "FILE:FILE");
}

TEST(Linearize, FileWithMain)
{
    graph::ArtifactGraph g;
    g.add_node({"f", "FILE", "FILE"});
    g.add_node({"m", "FUNCTION_DECL", "main"});
    g.add_edge("f", "m", EdgeLabel::AstChild);
    EXPECT_EQ(graph::linearize(g), "FILE:FILE FUNCTION_DECL:main");
}

TEST(Linearize, ClauseFollowsFunctionSubtree)
{
    auto g = c_graph("/*@ ensures \\result == 0; */\nint z(void) { return 0; }\nint w(void) { return 1; }\n");
    EXPECT_EQ(graph::linearize(g),
              "FILE:FILE FUNCTION_DECL:z COMPOUND_STMT:COMPOUND_STMT RETURN_STMT:RETURN_STMT INTEGER_LITERAL:0 "
              "SPEC_CLAUSE:ensures:_\\result_==_0 "
              "FUNCTION_DECL:w COMPOUND_STMT:COMPOUND_STMT RETURN_STMT:RETURN_STMT INTEGER_LITERAL:1");
}

TEST(Linearize, OneTokenPerNode)
{
    fs::path dir = artgraph::testing::data_dir() / "fixtures/graphs";
    for (const auto& a : corpus::scan_corpus(dir, Language::C)) {
        auto g = c_graph(a.source, a.path);
        std::istringstream in(graph::linearize(g));
        std::size_t tokens = 0;
        for (std::string t; in >> t;)
            ++tokens;
        EXPECT_EQ(tokens, g.nodes().size()) << a.path;
    }
    graph::ArtifactGraph g;
    g.add_node({"s", "STRING_LITERAL", " a \t b "});
    EXPECT_EQ(graph::linearize(g), "STRING_LITERAL:_a_b_");
}

TEST(Linearize, DeepTreeDoesNotOverflow)
{
    graph::ArtifactGraph g;
    g.add_node({"n0", "FILE", "FILE"});
    for (int i = 1; i < 200000; ++i) {
        g.add_node({"n" + std::to_string(i), "UNARY_OPERATOR", "-"});
        g.add_edge("n" + std::to_string(i - 1), "n" + std::to_string(i), EdgeLabel::AstChild);
    }
    EXPECT_EQ(graph::linearize(g).size(), std::string("FILE:FILE").size() + 199999 * std::string(" UNARY_OPERATOR:-").size());
}
