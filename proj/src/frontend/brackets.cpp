#include <string>
#include <string_view>

#include "artgraph/frontends.hpp"

namespace artgraph::frontend {

namespace {

// Length of a character literal starting at `i` ('x', '\n', '\''), or 0 when
// the quote is not the start of one (Dafny primes such as x' are identifiers).
std::size_t char_literal_length(std::string_view s, std::size_t i)
{
    if (i + 2 < s.size() && s[i + 1] != '\\' && s[i + 1] != '\n' && s[i + 2] == '\'')
        return 3;
    if (i + 1 < s.size() && s[i + 1] == '\\') {
        std::size_t j = i + 2;
        while (j < s.size() && j < i + 10 && s[j] != '\'' && s[j] != '\n')
            ++j;
        if (j < s.size() && s[j] == '\'' && j > i + 2)
            return j - i + 1;
        if (j < s.size() && s[j] == '\'' && j == i + 2 && j + 1 < s.size() && s[j + 1] == '\'')
            return 4;  // '\''
    }
    return 0;
}

// Walks `s`, calling `code(i)` for each byte outside comments and literals
// and `masked(i)` for each byte inside them (delimiters included).
template <typename Code, typename Masked>
void scan(std::string_view s, Code code, Masked masked)
{
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
            while (i < s.size() && s[i] != '\n')
                masked(i++);
            continue;
        }
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
            masked(i++);
            masked(i++);
            while (i < s.size() && !(s[i] == '*' && i + 1 < s.size() && s[i + 1] == '/'))
                masked(i++);
            if (i < s.size()) {
                masked(i++);
                masked(i++);
            }
            continue;
        }
        if (c == '"') {
            bool verbatim = i > 0 && s[i - 1] == '@';
            masked(i++);
            while (i < s.size()) {
                if (verbatim) {
                    if (s[i] == '"' && i + 1 < s.size() && s[i + 1] == '"') {
                        masked(i++);
                        masked(i++);
                        continue;
                    }
                } else if (s[i] == '\\' && i + 1 < s.size()) {
                    masked(i++);
                    masked(i++);
                    continue;
                }
                if (s[i] == '"' || (!verbatim && s[i] == '\n'))
                    break;
                masked(i++);
            }
            if (i < s.size() && s[i] == '"')
                masked(i++);
            continue;
        }
        if (c == '\'') {
            std::size_t n = char_literal_length(s, i);
            if (n > 0) {
                for (std::size_t k = 0; k < n; ++k)
                    masked(i++);
                continue;
            }
        }
        code(i++);
    }
}

int line_at(std::string_view s, std::size_t offset)
{
    int line = 1;
    for (std::size_t i = 0; i < offset && i < s.size(); ++i)
        if (s[i] == '\n')
            ++line;
    return line;
}

}  // namespace

std::string blank_comments_and_literals(std::string_view source)
{
    std::string out(source);
    scan(
        source, [](std::size_t) {},
        [&](std::size_t i) {
            if (out[i] != '\n')
                out[i] = ' ';
        });
    return out;
}

std::size_t find_matching_brace(std::string_view source, std::size_t open_index)
{
    if (open_index >= source.size() || source[open_index] != '{')
        return std::string_view::npos;
    std::string blank = blank_comments_and_literals(source);
    int depth = 0;
    for (std::size_t i = open_index; i < blank.size(); ++i) {
        if (blank[i] == '{') {
            ++depth;
        } else if (blank[i] == '}') {
            if (--depth == 0)
                return i;
        }
    }
    return std::string_view::npos;
}

BodyExtent extract_method_bodies(std::string_view source, std::size_t open_index)
{
    if (open_index >= source.size() || source[open_index] != '{')
        throw ParseError("expected '{'", line_at(source, open_index));
    std::size_t close = find_matching_brace(source, open_index);
    if (close == std::string_view::npos)
        throw ParseError("no matching '}' for '{'", line_at(source, open_index));
    return BodyExtent{std::string(source.substr(open_index + 1, close - open_index - 1)), close + 1};
}

}  // namespace artgraph::frontend
