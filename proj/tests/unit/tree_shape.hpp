#pragma once

#include <string>

#include "artgraph/syntax_tree.hpp"

namespace artgraph::testing {

/// canonical() without positions: `KIND "label"` per line, two-space indent.
inline std::string shape(const SyntaxTree& tree)
{
    std::string out;
    tree.walk([&](const SyntaxTree& n, int depth) {
        out.append(static_cast<std::size_t>(depth) * 2, ' ');
        out += n.kind + " \"" + n.label + "\"\n";
    });
    return out;
}

inline const SyntaxTree* find_kind(const SyntaxTree& tree, std::string_view kind)
{
    if (tree.kind == kind)
        return &tree;
    for (const auto& c : tree.children)
        if (const SyntaxTree* hit = find_kind(c, kind))
            return hit;
    return nullptr;
}

}  // namespace artgraph::testing
