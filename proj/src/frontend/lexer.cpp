#include "lexer.hpp"

#include <array>

#include "artgraph/frontends.hpp"

namespace artgraph::frontend::detail {

namespace {

// Longest first.
constexpr std::array<std::string_view, 28> kPuncts{
    ">>>=", ">>=", "<<=", ">>>", "...", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",   "||",  "+=",  "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "::", "=>", "??", "?.",
};

class Lexer {
public:
    Lexer(std::string_view src, Language lang) : src_(src), lang_(lang), index_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        bool line_start = true;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                line_start = true;
                ++pos_;
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                ++pos_;
                continue;
            }
            if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    ++pos_;
                continue;
            }
            if (c == '/' && peek(1) == '*') {
                auto close = src_.find("*/", pos_ + 2);
                if (close == std::string_view::npos)
                    throw ParseError("unterminated block comment", index_.line_of(pos_));
                pos_ = close + 2;
                continue;
            }
            if (c == '#' && line_start && lang_ != Language::Java) {
                skip_directive();
                continue;
            }
            line_start = false;
            out.push_back(next_token());
        }
        Token end;
        end.kind = TokKind::End;
        end.begin = end.end = src_.size();
        end.line = index_.line_of(src_.size());
        end.col = index_.column_of(src_.size());
        out.push_back(end);
        return out;
    }

private:
    char peek(std::size_t ahead) const
    {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void skip_directive()
    {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
            if (src_[pos_] == '\\' && peek(1) == '\n') {
                pos_ += 2;
                continue;
            }
            ++pos_;
        }
    }

    Token make(TokKind kind, std::size_t begin)
    {
        Token t;
        t.kind = kind;
        t.begin = begin;
        t.end = pos_;
        t.text = std::string(src_.substr(begin, pos_ - begin));
        t.line = index_.line_of(begin);
        t.col = index_.column_of(begin);
        return t;
    }

    void skip_quoted(char quote)
    {
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != quote && src_[pos_] != '\n') {
            if (src_[pos_] == '\\')
                ++pos_;
            ++pos_;
        }
        if (pos_ < src_.size() && src_[pos_] == quote)
            ++pos_;
    }

    Token next_token()
    {
        std::size_t begin = pos_;
        char c = src_[pos_];
        if (lang_ == Language::CSharp && (c == '@' || c == '$') && peek(1) == '"') {
            ++pos_;
            if (c == '@') {
                ++pos_;
                while (pos_ < src_.size()) {
                    if (src_[pos_] == '"' && peek(1) == '"') {
                        pos_ += 2;
                        continue;
                    }
                    if (src_[pos_++] == '"')
                        break;
                }
            } else {
                skip_quoted('"');
            }
            return make(TokKind::String, begin);
        }
        if (c == '"') {
            skip_quoted('"');
            return make(TokKind::String, begin);
        }
        if (c == '\'') {
            skip_quoted('\'');
            return make(TokKind::Char, begin);
        }
        if (text::is_ident_start(c) || static_cast<unsigned char>(c) >= 0x80 ||
            (c == '$' && lang_ == Language::Java)) {
            while (pos_ < src_.size() &&
                   (text::is_ident_char(src_[pos_]) || static_cast<unsigned char>(src_[pos_]) >= 0x80 ||
                    src_[pos_] == '$'))
                ++pos_;
            return make(TokKind::Ident, begin);
        }
        if ((c >= '0' && c <= '9') || (c == '.' && peek(1) >= '0' && peek(1) <= '9')) {
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (text::is_ident_char(d) || d == '.') {
                    ++pos_;
                } else if ((d == '+' || d == '-') &&
                           (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E') &&
                           !(src_[begin] == '0' && pos_ > begin + 1 &&
                             (src_[begin + 1] == 'x' || src_[begin + 1] == 'X'))) {
                    ++pos_;
                } else {
                    break;
                }
            }
            return make(TokKind::Number, begin);
        }
        for (auto p : kPuncts) {
            if (src_.substr(pos_, p.size()) == p) {
                // `>>` closes nested generics in Java/C#; keep angle brackets single there.
                if (lang_ != Language::C && p.starts_with(">>"))
                    continue;
                pos_ += p.size();
                return make(TokKind::Punct, begin);
            }
        }
        ++pos_;
        return make(TokKind::Punct, begin);
    }

    std::string_view src_;
    Language lang_;
    text::LineIndex index_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, Language lang)
{
    return Lexer(source, lang).run();
}

}  // namespace artgraph::frontend::detail
