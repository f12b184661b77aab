#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/diagnostics.hpp"
#include "artgraph/spec_clause.hpp"
#include "artgraph/syntax_tree.hpp"

namespace artgraph::frontend {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
    {}

    int line() const { return line_; }

private:
    int line_;
};

/// C subset: functions, declarations, structs/enums/typedefs, the usual
/// statements and expressions. Unbalanced braces raise ParseError; anything
/// else outside the subset becomes an UNKNOWN_STMT leaf carrying its text.
SyntaxTree parse_c(std::string_view source, Diagnostics* diag = nullptr);

/// Simple Java: FILE > CLASS_DECL > (FIELD_DECL | METHOD_DECL | CLASS_DECL).
SyntaxTree parse_java(std::string_view source, Diagnostics* diag = nullptr);

/// C# method bodies and members, parsed with the same statement grammar.
/// Used by the Dafny generator; there is no C# graph.
SyntaxTree parse_csharp(std::string_view source, Diagnostics* diag = nullptr);

struct DafnyParse {
    SyntaxTree tree;
    std::vector<SpecClause> clauses;
};

/// Pattern-driven Dafny extraction. Methods are located by keyword, bodies
/// by bracket matching, statements by top-level ';' splitting.
DafnyParse parse_dafny(std::string_view source, Diagnostics* diag = nullptr);

/// Clauses from `/*@ ... */`, `/*@ ... @*/` and `//@` comments. Only ACSL and
/// JML are accepted; Dafny clauses come from parse_dafny.
std::vector<SpecClause> extract_annotations(std::string_view source, Dialect dialect,
                                            Diagnostics* diag = nullptr);

struct BodyExtent {
    std::string body;      ///< text strictly between the braces
    std::size_t end = 0;   ///< index just past the closing brace

    bool operator==(const BodyExtent&) const = default;
};

/// Matches the '{' at `open_index`, skipping braces inside string and
/// character literals and comments.
BodyExtent extract_method_bodies(std::string_view source, std::size_t open_index);

/// Offset of the brace matching the '{' at `open_index`, or npos.
std::size_t find_matching_brace(std::string_view source, std::size_t open_index);

/// Replaces comment bodies and string/char literal contents with spaces,
/// keeping newlines and all offsets intact.
std::string blank_comments_and_literals(std::string_view source);

}  // namespace artgraph::frontend
