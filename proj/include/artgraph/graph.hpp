#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artgraph/diagnostics.hpp"
#include "artgraph/spec_clause.hpp"
#include "artgraph/syntax_tree.hpp"

namespace artgraph::graph {

enum class EdgeLabel { AstChild, Spec };

std::string_view to_string(EdgeLabel label);
std::optional<EdgeLabel> edge_label_from_name(std::string_view name);

struct GraphNode {
    std::string id;     ///< "<kind>:<line>:<col>:<seq>"
    std::string kind;   ///< GraphML key d0
    std::string label;  ///< GraphML key d1; equals kind when nothing else applies

    bool operator==(const GraphNode&) const = default;
};

struct GraphEdge {
    std::string source;
    std::string target;
    EdgeLabel label = EdgeLabel::AstChild;

    bool operator==(const GraphEdge&) const = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArtifactGraph {
public:
    std::string origin;

    const std::vector<GraphNode>& nodes() const { return nodes_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::string& root() const { return root_; }

    /// Appends a node; the first node added becomes the root.
    const GraphNode& add_node(GraphNode node);
    /// Throws GraphError when an endpoint is unknown.
    void add_edge(const std::string& source, const std::string& target, EdgeLabel label);

    const GraphNode* find(const std::string& id) const;
    std::size_t count_edges(EdgeLabel label) const;
    std::size_t count_kind(std::string_view kind) const;

    bool operator==(const ArtifactGraph& o) const
    {
        return origin == o.origin && nodes_ == o.nodes_ && edges_ == o.edges_ && root_ == o.root_;
    }

private:
    std::vector<GraphNode> nodes_;
    std::vector<GraphEdge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
    std::string root_;
};

/// One node per tree node plus one SPEC_CLAUSE node per clause. A clause is
/// linked from the function, class or loop node matching its attachment
/// (name and line; name alone when that is unique), otherwise from the root.
ArtifactGraph build_graph(const SyntaxTree& tree, const std::vector<SpecClause>& clauses, const std::string& origin);

/// parse_dafny followed by build_graph. Throws frontend::ParseError.
ArtifactGraph build_dafny_graph(std::string_view source, const std::string& origin, Diagnostics* diag = nullptr);

/// Directed GraphML with node keys d0 ("type") and d1 ("label") and edge key
/// d2 ("label"). Node and edge order follow insertion order.
std::string write_graphml(const ArtifactGraph& graph);

/// Inverse of write_graphml. Throws GraphError naming the offending element.
ArtifactGraph read_graphml(std::string_view text);

/// Pre-order walk over AST_CHILD edges emitting "<kind>:<label>" tokens;
/// SPEC children of a node follow its subtree. Whitespace runs inside a label
/// are written as '_', so the token count equals the node count.
std::string linearize(const ArtifactGraph& graph);

}  // namespace artgraph::graph
