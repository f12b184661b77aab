#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artgraph/diagnostics.hpp"

namespace artgraph::transpile {

enum class RuleScope { Line, Block, File };

struct RewriteRule {
    std::string id;
    std::string pattern;      ///< matched C construct
    std::string replacement;  ///< emitted target construct
    RuleScope scope = RuleScope::Line;
};

enum class Target { Java, CSharp };

/// Rules in application order; earlier rules win on overlapping matches.
const std::vector<RewriteRule>& rules(Target target);

/// Marker put in front of lines that no rule could convert.
inline constexpr std::string_view kTodoMarker = "// TODO(transpile)";

/// Line-oriented C to Java rewrite wrapped in `public class <class_name>`.
/// Never fails; lines outside the supported subset are carried over behind
/// kTodoMarker.
std::string c_to_java(std::string_view source, const std::string& class_name, Diagnostics* diag = nullptr);

/// Line-oriented C to C# rewrite wrapped in `class <class_name>`.
std::string c_to_csharp(std::string_view source, const std::string& class_name, Diagnostics* diag = nullptr);

}  // namespace artgraph::transpile
