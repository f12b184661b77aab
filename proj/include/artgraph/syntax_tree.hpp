#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace artgraph {

struct Span {
    int line = 1;
    int column = 1;

    auto operator<=>(const Span&) const = default;
};

/// Language-neutral structure tree. `kind` is drawn from the shared kind
/// vocabulary (docs/node-kinds.md); `label` carries identifier, operator or
/// literal text and may be empty.
///
/// `begin`/`end` are byte offsets into the parsed source and `type` holds the
/// declared type of declarations. They support the generators and are not
/// part of the canonical form.
struct SyntaxTree {
    std::string kind;
    std::string label;
    Span span;
    std::vector<SyntaxTree> children;

    std::size_t begin = 0;
    std::size_t end = 0;
    std::string type;

    SyntaxTree() = default;
    SyntaxTree(std::string k, std::string l, Span s) : kind(std::move(k)), label(std::move(l)), span(s) {}

    SyntaxTree& add(SyntaxTree child)
    {
        children.push_back(std::move(child));
        return children.back();
    }

    std::size_t node_count() const;

    /// Pre-order visit; the callback receives the node and its depth.
    void walk(const std::function<void(const SyntaxTree&, int)>& fn, int depth = 0) const;

    /// Indented text form, one node per line: `KIND "label" line:col`.
    /// Used for golden files and determinism checks.
    std::string canonical() const;
};

namespace kinds {
inline constexpr std::string_view kFile = "FILE";
inline constexpr std::string_view kFunctionDecl = "FUNCTION_DECL";
inline constexpr std::string_view kMethodDecl = "METHOD_DECL";
inline constexpr std::string_view kClassDecl = "CLASS_DECL";
inline constexpr std::string_view kStructDecl = "STRUCT_DECL";
inline constexpr std::string_view kFieldDecl = "FIELD_DECL";
inline constexpr std::string_view kVarDecl = "VAR_DECL";
inline constexpr std::string_view kDeclStmt = "DECL_STMT";
inline constexpr std::string_view kCompoundStmt = "COMPOUND_STMT";
inline constexpr std::string_view kIfStmt = "IF_STMT";
inline constexpr std::string_view kWhileStmt = "WHILE_STMT";
inline constexpr std::string_view kDoStmt = "DO_STMT";
inline constexpr std::string_view kForStmt = "FOR_STMT";
inline constexpr std::string_view kForEachStmt = "FOR_EACH_STMT";
inline constexpr std::string_view kSwitchStmt = "SWITCH_STMT";
inline constexpr std::string_view kCaseStmt = "CASE_STMT";
inline constexpr std::string_view kDefaultStmt = "DEFAULT_STMT";
inline constexpr std::string_view kReturnStmt = "RETURN_STMT";
inline constexpr std::string_view kBreakStmt = "BREAK_STMT";
inline constexpr std::string_view kContinueStmt = "CONTINUE_STMT";
inline constexpr std::string_view kNullStmt = "NULL_STMT";
inline constexpr std::string_view kLabelStmt = "LABEL_STMT";
inline constexpr std::string_view kUnknownStmt = "UNKNOWN_STMT";
inline constexpr std::string_view kStatement = "STATEMENT";
inline constexpr std::string_view kBinaryOperator = "BINARY_OPERATOR";
inline constexpr std::string_view kUnaryOperator = "UNARY_OPERATOR";
inline constexpr std::string_view kConditionalOperator = "CONDITIONAL_OPERATOR";
inline constexpr std::string_view kCallExpr = "CALL_EXPR";
inline constexpr std::string_view kDeclRefExpr = "DECL_REF_EXPR";
inline constexpr std::string_view kMemberRefExpr = "MEMBER_REF_EXPR";
inline constexpr std::string_view kArraySubscriptExpr = "ARRAY_SUBSCRIPT_EXPR";
inline constexpr std::string_view kCastExpr = "CAST_EXPR";
inline constexpr std::string_view kNewExpr = "NEW_EXPR";
inline constexpr std::string_view kInitListExpr = "INIT_LIST_EXPR";
inline constexpr std::string_view kSizeofExpr = "SIZEOF_EXPR";
inline constexpr std::string_view kIntegerLiteral = "INTEGER_LITERAL";
inline constexpr std::string_view kFloatingLiteral = "FLOATING_LITERAL";
inline constexpr std::string_view kStringLiteral = "STRING_LITERAL";
inline constexpr std::string_view kCharacterLiteral = "CHARACTER_LITERAL";
inline constexpr std::string_view kBoolLiteral = "BOOL_LITERAL";
inline constexpr std::string_view kNullLiteral = "NULL_LITERAL";
inline constexpr std::string_view kTypeRef = "TYPE_REF";
inline constexpr std::string_view kTypedefDecl = "TYPEDEF_DECL";
inline constexpr std::string_view kEnumDecl = "ENUM_DECL";
inline constexpr std::string_view kEnumConstantDecl = "ENUM_CONSTANT_DECL";
inline constexpr std::string_view kSpecClause = "SPEC_CLAUSE";

/// Whether `kind` belongs to the documented vocabulary.
bool is_known(std::string_view kind);
bool is_function_like(std::string_view kind);
bool is_loop(std::string_view kind);
bool is_class_like(std::string_view kind);
}  // namespace kinds

}  // namespace artgraph
