#pragma once

#include <string>
#include <string_view>

namespace artgraph {

enum class ClauseKind { Requires, Ensures, Invariant, Assigns, Assignable, Assert, Assume, Decreases, Other };

enum class Dialect { ACSL, JML, DafnyNative };

enum class AttachKind { Function, Loop, Class, File };

struct AttachTarget {
    AttachKind kind = AttachKind::File;
    std::string name;  ///< function/class name, or the loop keyword
    int line = 0;      ///< line of the target's header; 0 for File

    bool operator==(const AttachTarget&) const = default;
};

/// One annotation clause, stripped of comment markers and the trailing ';'.
struct SpecClause {
    ClauseKind kind = ClauseKind::Other;
    std::string keyword;  ///< leading keyword as written, e.g. "loop invariant"
    std::string text;     ///< clause body, whitespace-normalized
    AttachTarget attach;
    Dialect dialect = Dialect::ACSL;
    int line = 0;  ///< where the clause keyword appears
    int column = 0;

    /// Kind name for display: the canonical name, or the raw keyword for Other.
    std::string kind_name() const;

    bool operator==(const SpecClause&) const = default;
};

std::string_view to_string(ClauseKind kind);
std::string_view to_string(Dialect dialect);
std::string_view to_string(AttachKind kind);

}  // namespace artgraph
