#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/syntax_tree.hpp"

namespace artgraph::specgen::detail {

std::string slice(std::string_view src, const SyntaxTree& n);

bool is_assign_op(std::string_view op);

/// The expression an assignment or ++/-- node writes, or nullptr.
const SyntaxTree* written_target(const SyntaxTree& n);

/// Name of the variable at the base of an lvalue (`a` in `a[i].x`).
std::string root_name(const SyntaxTree& target);

void collect_refs(const SyntaxTree& n, std::set<std::string>& out);

/// Number of writes anywhere under `n` whose target is exactly `name`.
int count_writes(const SyntaxTree& n, const std::string& name);

bool is_name_or_literal(const SyntaxTree& e);

/// +1 or -1 when `stmt` steps `var` by one (`i++`, `i += 1`, `i = i + 1`, ...), else 0.
int unit_step(const SyntaxTree& stmt, const std::string& var);

struct LoopShape {
    std::string var;
    std::string lo;         ///< initial value text
    bool has_init = false;
    bool lo_simple = false;
    std::string op;         ///< comparison with var on the left
    std::string bound;
    bool bound_simple = false;
    bool bound_stable = false;
    int step = 0;

    /// Single index, initialized, strict name/literal upper bound, unit increment.
    bool recognized() const;
    /// Decreasing measure when one can be read off the guard and step.
    std::optional<std::string> variant() const;
};

/// Loop structure for FOR_STMT / WHILE_STMT / DO_STMT. `siblings` and
/// `index` locate the loop in its enclosing block so a preceding
/// initialization can be found for while and do loops.
std::optional<LoopShape> analyze_loop(std::string_view src, const SyntaxTree& loop,
                                      const std::vector<SyntaxTree>* siblings, std::size_t index);

const SyntaxTree& loop_body(const SyntaxTree& loop);

/// Whether a statement's control flow ends in a return with a value; sets `expr`.
const SyntaxTree* trailing_return(const SyntaxTree& stmt);

struct Insertion {
    int before_line = 1;  ///< 1-based; line_count + 1 appends
    int order = 0;
    std::vector<std::string> lines;
};

std::string apply_insertions(std::string_view src, std::vector<Insertion> ins);

}  // namespace artgraph::specgen::detail
