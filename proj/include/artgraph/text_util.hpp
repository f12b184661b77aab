#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace artgraph::text {

std::string_view trim(std::string_view s);

/// Collapses every whitespace run (including newlines) to one space and trims.
/// Control characters count as whitespace.
std::string normalize_ws(std::string_view s);

std::vector<std::string> split_lines(std::string_view s);

bool starts_with_word(std::string_view s, std::string_view word);

bool is_ident_start(char c);
bool is_ident_char(char c);
bool is_identifier(std::string_view s);

/// Replaces invalid UTF-8 sequences with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

/// Maps byte offsets to 1-based (line, column) pairs.
class LineIndex {
public:
    explicit LineIndex(std::string_view text);
    int line_of(std::size_t offset) const;
    int column_of(std::size_t offset) const;
    std::size_t line_start(int line) const;
    int line_count() const { return static_cast<int>(starts_.size()); }

private:
    std::vector<std::size_t> starts_;
};

/// Leading whitespace of the line containing `offset`.
std::string indentation_at(std::string_view text, std::size_t offset);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// FNV-1a 64 of `bytes`, used for content fingerprints in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Replaces whole-word occurrences of `from` with `to` outside string and
/// character literals.
std::string replace_word(std::string_view s, std::string_view from, std::string_view to);

}  // namespace artgraph::text
