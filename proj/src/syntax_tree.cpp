#include "artgraph/syntax_tree.hpp"

#include <array>
#include <string>

#include "artgraph/spec_clause.hpp"

namespace artgraph {

std::size_t SyntaxTree::node_count() const
{
    std::size_t n = 1;
    for (const auto& c : children)
        n += c.node_count();
    return n;
}

void SyntaxTree::walk(const std::function<void(const SyntaxTree&, int)>& fn, int depth) const
{
    fn(*this, depth);
    for (const auto& c : children)
        c.walk(fn, depth + 1);
}

std::string SyntaxTree::canonical() const
{
    std::string out;
    walk([&](const SyntaxTree& n, int depth) {
        out.append(static_cast<std::size_t>(depth) * 2, ' ');
        out += n.kind;
        out += " \"";
        for (char c : n.label) {
            if (c == '"' || c == '\\')
                out += '\\';
            if (c == '\n') {
                out += "\\n";
                continue;
            }
            out += c;
        }
        out += "\" ";
        out += std::to_string(n.span.line);
        out += ':';
        out += std::to_string(n.span.column);
        out += '\n';
    });
    return out;
}

namespace kinds {

bool is_known(std::string_view kind)
{
    static constexpr std::array kAll{
        kFile,          kFunctionDecl,      kMethodDecl,        kClassDecl,      kStructDecl,
        kFieldDecl,     kVarDecl,           kDeclStmt,          kCompoundStmt,   kIfStmt,
        kWhileStmt,     kDoStmt,            kForStmt,           kForEachStmt,    kSwitchStmt,
        kCaseStmt,      kDefaultStmt,       kReturnStmt,        kBreakStmt,      kContinueStmt,
        kNullStmt,      kLabelStmt,         kUnknownStmt,       kStatement,      kBinaryOperator,
        kUnaryOperator, kConditionalOperator, kCallExpr,        kDeclRefExpr,    kMemberRefExpr,
        kArraySubscriptExpr, kCastExpr,     kNewExpr,           kInitListExpr,   kSizeofExpr,
        kIntegerLiteral, kFloatingLiteral,  kStringLiteral,     kCharacterLiteral, kBoolLiteral,
        kNullLiteral,   kTypeRef,           kTypedefDecl,       kEnumDecl,       kEnumConstantDecl,
        kSpecClause,
    };
    for (auto k : kAll) {
        if (k == kind)
            return true;
    }
    return false;
}

bool is_function_like(std::string_view kind)
{
    return kind == kFunctionDecl || kind == kMethodDecl;
}

bool is_loop(std::string_view kind)
{
    return kind == kForStmt || kind == kWhileStmt || kind == kDoStmt || kind == kForEachStmt;
}

bool is_class_like(std::string_view kind)
{
    return kind == kClassDecl || kind == kStructDecl;
}

}  // namespace kinds

std::string_view to_string(ClauseKind kind)
{
    switch (kind) {
    case ClauseKind::Requires: return "requires";
    case ClauseKind::Ensures: return "ensures";
    case ClauseKind::Invariant: return "invariant";
    case ClauseKind::Assigns: return "assigns";
    case ClauseKind::Assignable: return "assignable";
    case ClauseKind::Assert: return "assert";
    case ClauseKind::Assume: return "assume";
    case ClauseKind::Decreases: return "decreases";
    case ClauseKind::Other: return "other";
    }
    return "other";
}

std::string_view to_string(Dialect dialect)
{
    switch (dialect) {
    case Dialect::ACSL: return "ACSL";
    case Dialect::JML: return "JML";
    case Dialect::DafnyNative: return "Dafny";
    }
    return "ACSL";
}

std::string_view to_string(AttachKind kind)
{
    switch (kind) {
    case AttachKind::Function: return "function";
    case AttachKind::Loop: return "loop";
    case AttachKind::Class: return "class";
    case AttachKind::File: return "file";
    }
    return "file";
}

std::string SpecClause::kind_name() const
{
    if (kind == ClauseKind::Other)
        return keyword;
    return std::string(to_string(kind));
}

}  // namespace artgraph
