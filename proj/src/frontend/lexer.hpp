#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/text_util.hpp"
#include "artgraph/types.hpp"

namespace artgraph::frontend::detail {

enum class TokKind { Ident, Number, String, Char, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    std::size_t begin = 0;
    std::size_t end = 0;
    int line = 1;
    int col = 1;

    bool is(std::string_view punct_or_word) const
    {
        return (kind == TokKind::Punct || kind == TokKind::Ident) && text == punct_or_word;
    }
};

/// Tokenizes C-family source. Comments are dropped; in C and C# mode,
/// preprocessor lines are dropped too. Throws ParseError on an
/// unterminated block comment.
std::vector<Token> tokenize(std::string_view source, Language lang);

}  // namespace artgraph::frontend::detail
