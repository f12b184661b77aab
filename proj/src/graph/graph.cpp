#include "artgraph/graph.hpp"

#include <cctype>
#include <functional>

#include "artgraph/frontends.hpp"

namespace artgraph::graph {

std::string_view to_string(EdgeLabel label)
{
    return label == EdgeLabel::AstChild ? "AST_CHILD" : "SPEC";
}

std::optional<EdgeLabel> edge_label_from_name(std::string_view name)
{
    if (name == "AST_CHILD")
        return EdgeLabel::AstChild;
    if (name == "SPEC")
        return EdgeLabel::Spec;
    return std::nullopt;
}

const GraphNode& ArtifactGraph::add_node(GraphNode node)
{
    if (index_.contains(node.id))
        throw GraphError("duplicate node id '" + node.id + "'");
    if (nodes_.empty())
        root_ = node.id;
    index_.emplace(node.id, nodes_.size());
    nodes_.push_back(std::move(node));
    return nodes_.back();
}

void ArtifactGraph::add_edge(const std::string& source, const std::string& target, EdgeLabel label)
{
    if (!index_.contains(source))
        throw GraphError("edge source '" + source + "' is not a node");
    if (!index_.contains(target))
        throw GraphError("edge target '" + target + "' is not a node");
    edges_.push_back(GraphEdge{source, target, label});
}

const GraphNode* ArtifactGraph::find(const std::string& id) const
{
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &nodes_[it->second];
}

std::size_t ArtifactGraph::count_edges(EdgeLabel label) const
{
    std::size_t n = 0;
    for (const auto& e : edges_)
        n += e.label == label ? 1 : 0;
    return n;
}

std::size_t ArtifactGraph::count_kind(std::string_view kind) const
{
    std::size_t n = 0;
    for (const auto& v : nodes_)
        n += v.kind == kind ? 1 : 0;
    return n;
}

namespace {

struct Anchor {
    std::string id;
    std::string kind;
    std::string name;
    int line = 0;
};

/// Declared name of a function-like node; Dafny labels carry the signature.
std::string declared_name(const SyntaxTree& n)
{
    std::size_t paren = n.label.find('(');
    std::string name = paren == std::string::npos ? n.label : n.label.substr(0, paren);
    while (!name.empty() && name.back() == ' ')
        name.pop_back();
    return name;
}

bool loop_keyword_matches(std::string_view keyword, std::string_view kind)
{
    if (keyword == "for")
        return kind == kinds::kForStmt || kind == kinds::kForEachStmt;
    if (keyword == "while")
        return kind == kinds::kWhileStmt;
    if (keyword == "do")
        return kind == kinds::kDoStmt;
    if (keyword == "foreach")
        return kind == kinds::kForEachStmt;
    return kinds::is_loop(kind);
}

bool anchor_matches(const Anchor& a, const AttachTarget& t, bool check_line)
{
    if (check_line && a.line != t.line)
        return false;
    switch (t.kind) {
    case AttachKind::Function:
        return kinds::is_function_like(a.kind) && a.name == t.name;
    case AttachKind::Class:
        return kinds::is_class_like(a.kind) && a.name == t.name;
    case AttachKind::Loop:
        return kinds::is_loop(a.kind) && loop_keyword_matches(t.name, a.kind);
    case AttachKind::File:
        return false;
    }
    return false;
}

}  // namespace

ArtifactGraph build_graph(const SyntaxTree& tree, const std::vector<SpecClause>& clauses, const std::string& origin)
{
    ArtifactGraph g;
    g.origin = origin;
    std::size_t seq = 0;
    auto make_id = [&](std::string_view kind, int line, int col) {
        return std::string(kind) + ":" + std::to_string(line) + ":" + std::to_string(col) + ":" + std::to_string(seq++);
    };

    std::vector<Anchor> anchors;
    std::function<std::string(const SyntaxTree&)> add = [&](const SyntaxTree& n) {
        std::string id = make_id(n.kind, n.span.line, n.span.column);
        g.add_node(GraphNode{id, n.kind, n.label.empty() ? n.kind : n.label});
        if (kinds::is_function_like(n.kind) || kinds::is_class_like(n.kind) || kinds::is_loop(n.kind))
            anchors.push_back(Anchor{id, n.kind, declared_name(n), n.span.line});
        for (const auto& c : n.children) {
            std::string cid = add(c);
            g.add_edge(id, cid, EdgeLabel::AstChild);
        }
        return id;
    };
    add(tree);

    for (const auto& c : clauses) {
        std::string owner = g.root();
        if (c.attach.kind != AttachKind::File) {
            const Anchor* hit = nullptr;
            for (const auto& a : anchors) {
                if (anchor_matches(a, c.attach, true)) {
                    hit = &a;
                    break;
                }
            }
            if (!hit && c.attach.kind != AttachKind::Loop) {
                const Anchor* only = nullptr;
                int matches = 0;
                for (const auto& a : anchors) {
                    if (anchor_matches(a, c.attach, false)) {
                        only = &a;
                        ++matches;
                    }
                }
                if (matches == 1)
                    hit = only;
            }
            if (hit)
                owner = hit->id;
        }
        std::string id = make_id(kinds::kSpecClause, c.line, c.column);
        g.add_node(GraphNode{id, std::string(kinds::kSpecClause), c.kind_name() + ": " + c.text});
        g.add_edge(owner, id, EdgeLabel::Spec);
    }
    return g;
}

ArtifactGraph build_dafny_graph(std::string_view source, const std::string& origin, Diagnostics* diag)
{
    frontend::DafnyParse parsed = frontend::parse_dafny(source, diag);
    return build_graph(parsed.tree, parsed.clauses, origin);
}

std::string linearize(const ArtifactGraph& graph)
{
    if (graph.nodes().empty())
        return {};
    std::unordered_map<std::string, std::vector<const GraphNode*>> ast;
    std::unordered_map<std::string, std::vector<const GraphNode*>> spec;
    for (const auto& e : graph.edges())
        (e.label == EdgeLabel::AstChild ? ast : spec)[e.source].push_back(graph.find(e.target));

    std::string out;
    auto emit = [&](const GraphNode& n) {
        if (!out.empty())
            out += ' ';
        out += n.kind;
        out += ':';
        // whitespace runs inside a label become '_' so one node is one token
        bool gap = false;
        for (char c : n.label) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                gap = true;
                continue;
            }
            if (gap)
                out += '_';
            gap = false;
            out += c;
        }
        if (gap)
            out += '_';
    };
    // explicit stack: a node is entered, then its spec children are emitted on exit
    struct Frame {
        const GraphNode* node;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    const GraphNode* root = graph.find(graph.root());
    emit(*root);
    stack.push_back({root});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto it = ast.find(f.node->id);
        if (it != ast.end() && f.next < it->second.size()) {
            const GraphNode* child = it->second[f.next++];
            emit(*child);
            stack.push_back({child});
            continue;
        }
        auto sp = spec.find(f.node->id);
        if (sp != spec.end())
            for (const GraphNode* s : sp->second)
                emit(*s);
        stack.pop_back();
    }
    return out;
}

}  // namespace artgraph::graph
