#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artgraph/diagnostics.hpp"
#include "artgraph/spec_clause.hpp"

namespace artgraph::specgen {

/// Clauses generated for one function, method, loop or class.
struct GeneratedContract {
    AttachTarget target;
    std::vector<SpecClause> clauses;
    int insertion = 0;  ///< 1-based line of the target's declaration in the input
};

struct GenResult {
    std::string text;
    std::vector<GeneratedContract> contracts;  ///< in output order

    std::size_t clause_count() const;
    std::vector<SpecClause> all_clauses() const;
};

/// ACSL contracts for C functions. Blocks are inserted as whole lines above
/// their function or loop; targets that already carry clauses are left alone.
GenResult gen_acsl(std::string_view source, Diagnostics* diag = nullptr);

/// JML class invariants and method contracts. Preprocessor lines are removed
/// before anything else.
GenResult gen_jml(std::string_view source, Diagnostics* diag = nullptr);

/// One Dafny method per C# method, with dual postconditions and loop
/// invariants where the patterns apply.
std::string gen_dafny(std::string_view source, Diagnostics* diag = nullptr);

/// Removes annotation comments that occupy whole lines (`//@` lines and
/// `/*@ ... */` blocks). Inverse of the line insertions made by the ACSL and
/// JML generators.
std::string strip_annotations(std::string_view text);

}  // namespace artgraph::specgen
