#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/frontends.hpp"
#include "artgraph/text_util.hpp"

namespace artgraph::frontend {

namespace {

constexpr int kAttachWindow = 3;

struct Comment {
    std::size_t begin = 0;  ///< offset of the opening marker
    std::size_t end = 0;    ///< offset just past the closing marker
    std::string content;    ///< same length as [begin, end), markers blanked
};

struct Header {
    AttachKind kind = AttachKind::Function;
    std::string name;
    int line = 0;
    std::size_t begin = 0;
    std::size_t open = std::string_view::npos;   ///< '{' of the body, if any
    std::size_t close = std::string_view::npos;  ///< matching '}'
};

// Annotation comments in source order. Ordinary comments are skipped; string
// and character literals are stepped over so markers inside them are inert.
std::vector<Comment> find_annotation_comments(std::string_view src, const text::LineIndex& lines)
{
    std::vector<Comment> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == '"') {
            ++i;
            while (i < src.size() && src[i] != '"' && src[i] != '\n') {
                if (src[i] == '\\')
                    ++i;
                ++i;
            }
            ++i;
            continue;
        }
        if (c == '\'' && i + 2 < src.size() && (src[i + 2] == '\'' || src[i + 1] == '\\')) {
            i += src[i + 1] == '\\' ? 4 : 3;
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            std::size_t e = src.find('\n', i);
            if (e == std::string_view::npos)
                e = src.size();
            if (i + 2 < src.size() && src[i + 2] == '@') {
                Comment cm{i, e, std::string(src.substr(i, e - i))};
                cm.content.replace(0, 3, "   ");
                out.push_back(std::move(cm));
            }
            i = e;
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
            std::size_t e = src.find("*/", i + 2);
            if (e == std::string_view::npos)
                throw ParseError("unterminated block comment", lines.line_of(i));
            e += 2;
            if (i + 2 < e - 2 && src[i + 2] == '@') {
                Comment cm{i, e, std::string(src.substr(i, e - i))};
                std::string& s = cm.content;
                s.replace(0, 3, "   ");
                s.replace(s.size() - 2, 2, "  ");
                // `@*/` closer and leading '@' on continuation lines
                std::size_t k = s.size() - 2;
                while (k > 0 && s[k - 1] == '@')
                    s[--k] = ' ';
                bool line_start = false;
                for (char& ch : s) {
                    if (ch == '\n') {
                        line_start = true;
                    } else if (line_start && ch == '@') {
                        ch = ' ';
                    } else if (line_start && ch != ' ' && ch != '\t') {
                        line_start = false;
                    }
                }
                out.push_back(std::move(cm));
            }
            i = e;
            continue;
        }
        ++i;
    }
    return out;
}

bool word_at(std::string_view s, std::size_t i, std::string_view w)
{
    if (s.substr(i, w.size()) != w)
        return false;
    if (i > 0 && text::is_ident_char(s[i - 1]))
        return false;
    std::size_t e = i + w.size();
    return e >= s.size() || !text::is_ident_char(s[e]);
}

std::size_t skip_space(std::string_view s, std::size_t i)
{
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
    return i;
}

std::size_t match_paren(std::string_view s, std::size_t open)
{
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            if (--depth == 0)
                return i;
        }
    }
    return std::string_view::npos;
}

std::string last_identifier_before(std::string_view s, std::size_t pos)
{
    std::size_t e = pos;
    while (e > 0 && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    std::size_t b = e;
    while (b > 0 && text::is_ident_char(s[b - 1]))
        --b;
    return std::string(s.substr(b, e - b));
}

// Function and class headers (by their '{') and loop headers (by keyword),
// located on text whose comments and literals are blanked.
std::vector<Header> find_headers(std::string_view blank, const text::LineIndex& lines)
{
    static const std::vector<std::string_view> kSkip{
        "if", "else", "switch", "try", "catch", "finally", "synchronized", "using", "lock",
        "do", "for", "while", "foreach", "unsafe", "checked", "unchecked", "get", "set",
        "namespace", "return",
    };
    static const std::vector<std::string_view> kClassWords{"class", "interface", "struct", "enum", "record"};

    std::vector<Header> out;
    for (std::size_t p = 0; p < blank.size(); ++p) {
        if (blank[p] != '{')
            continue;
        int depth = 0;
        std::size_t s = p;
        while (s > 0) {
            char c = blank[s - 1];
            if (c == ')') {
                ++depth;
            } else if (c == '(') {
                --depth;
            } else if (depth == 0 && (c == ';' || c == '{' || c == '}')) {
                break;
            }
            --s;
        }
        // drop preprocessor lines in front of the header
        std::string_view seg = blank.substr(s, p - s);
        std::size_t cut = 0;
        for (std::size_t k = 0; k < seg.size(); ++k) {
            if (seg[k] == '\n') {
                std::size_t n = skip_space(seg, k + 1);
                if (n < seg.size() && seg[n] == '#') {
                    std::size_t eol = seg.find('\n', n);
                    cut = eol == std::string_view::npos ? seg.size() : eol;
                    k = cut - 1;
                }
            }
        }
        {
            std::size_t n = skip_space(seg, 0);
            if (n < seg.size() && seg[n] == '#' && cut == 0) {
                std::size_t eol = seg.find('\n', n);
                cut = eol == std::string_view::npos ? seg.size() : eol;
            }
        }
        s += cut;
        s = skip_space(blank, s);
        if (s >= p)
            continue;
        std::string_view head = text::trim(blank.substr(s, p - s));
        std::string first_word;
        {
            std::size_t k = 0;
            while (k < head.size() && text::is_ident_char(head[k]))
                ++k;
            first_word = std::string(head.substr(0, k));
        }
        if (std::find(kSkip.begin(), kSkip.end(), first_word) != kSkip.end() || head == "static")
            continue;
        if (head.find('=') != std::string_view::npos && head.find('(') == std::string_view::npos)
            continue;

        Header h;
        h.begin = s;
        h.line = lines.line_of(s);
        h.open = p;
        int d = 0;
        for (std::size_t q = p; q < blank.size(); ++q) {
            if (blank[q] == '{') {
                ++d;
            } else if (blank[q] == '}' && --d == 0) {
                h.close = q;
                break;
            }
        }

        bool is_class = false;
        for (auto w : kClassWords) {
            for (std::size_t k = 0; k + w.size() <= head.size(); ++k) {
                if (word_at(head, k, w)) {
                    std::size_t n = skip_space(head, k + w.size());
                    std::size_t e = n;
                    while (e < head.size() && text::is_ident_char(head[e]))
                        ++e;
                    if (head.find('(') == std::string_view::npos || head.find('(') > k) {
                        h.kind = AttachKind::Class;
                        h.name = std::string(head.substr(n, e - n));
                        is_class = true;
                    }
                    break;
                }
            }
            if (is_class)
                break;
        }
        if (!is_class) {
            std::size_t paren = head.find('(');
            if (paren == std::string_view::npos || head.back() == ';')
                continue;
            if (head.find('=') != std::string_view::npos && head.find('=') < paren)
                continue;
            h.kind = AttachKind::Function;
            h.name = last_identifier_before(head, paren);
            if (h.name.empty() || !text::is_ident_start(h.name[0]))
                continue;
        }
        out.push_back(std::move(h));
    }

    for (std::size_t i = 0; i < blank.size(); ++i) {
        bool is_for = word_at(blank, i, "for");
        bool is_foreach = word_at(blank, i, "foreach");
        bool is_while = word_at(blank, i, "while");
        bool is_do = word_at(blank, i, "do");
        if (!is_for && !is_foreach && !is_while && !is_do)
            continue;
        if (is_while) {
            std::size_t open = skip_space(blank, i + 5);
            if (open < blank.size() && blank[open] == '(') {
                std::size_t close = match_paren(blank, open);
                if (close != std::string_view::npos) {
                    std::size_t after = skip_space(blank, close + 1);
                    if (after < blank.size() && blank[after] == ';')
                        continue;  // tail of do-while
                }
            }
        }
        if (is_for || is_foreach || is_while) {
            std::size_t open = skip_space(blank, i + (is_for ? 3 : is_while ? 5 : 7));
            if (open >= blank.size() || blank[open] != '(')
                continue;
        }
        Header h;
        h.kind = AttachKind::Loop;
        h.name = is_for ? "for" : is_foreach ? "foreach" : is_while ? "while" : "do";
        h.begin = i;
        h.line = lines.line_of(i);
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Header& a, const Header& b) { return a.begin < b.begin; });
    return out;
}

struct Classified {
    ClauseKind kind = ClauseKind::Other;
    bool loop = false;
    bool known = true;
};

Classified classify(std::string_view keyword, Dialect dialect)
{
    using CK = ClauseKind;
    if (dialect == Dialect::ACSL) {
        if (keyword == "requires")
            return {CK::Requires};
        if (keyword == "ensures")
            return {CK::Ensures};
        if (keyword == "assigns")
            return {CK::Assigns};
        if (keyword == "invariant")
            return {CK::Invariant};
        if (keyword == "assert")
            return {CK::Assert};
        if (keyword == "assume" || keyword == "assumes")
            return {CK::Assume};
        if (keyword == "decreases")
            return {CK::Decreases};
        if (keyword == "loop invariant")
            return {CK::Invariant, true};
        if (keyword == "loop variant")
            return {CK::Decreases, true};
        if (keyword == "loop assigns")
            return {CK::Assigns, true};
        return {CK::Other, false, false};
    }
    if (keyword == "requires" || keyword == "pre")
        return {CK::Requires};
    if (keyword == "ensures" || keyword == "post")
        return {CK::Ensures};
    if (keyword == "assignable" || keyword == "modifies" || keyword == "modifiable")
        return {CK::Assignable};
    if (keyword == "invariant")
        return {CK::Invariant};
    if (keyword == "loop_invariant" || keyword == "maintaining")
        return {CK::Invariant, true};
    if (keyword == "decreases" || keyword == "decreasing" || keyword == "loop_decreases")
        return {CK::Decreases, keyword != "decreases"};
    if (keyword == "assert")
        return {CK::Assert};
    if (keyword == "assume")
        return {CK::Assume};
    return {CK::Other, false, false};
}

// Splits annotation content on ';' outside brackets. A binder such as
// `\forall integer k;` owns the next ';'.
std::vector<std::pair<std::size_t, std::size_t>> split_clauses(std::string_view s)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 0;
    int depth = 0;
    int pending_binders = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '"') {
            ++i;
            while (i < s.size() && s[i] != '"') {
                if (s[i] == '\\')
                    ++i;
                ++i;
            }
            continue;
        }
        if (c == '(' || c == '[' || c == '{') {
            ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
            depth = std::max(0, depth - 1);
        } else if (c == '\\' && depth == 0) {
            if (s.substr(i, 7) == "\\forall" || s.substr(i, 7) == "\\exists")
                ++pending_binders;
        } else if (c == ';' && depth == 0) {
            if (pending_binders > 0) {
                --pending_binders;
                continue;
            }
            out.emplace_back(start, i);
            start = i + 1;
        }
    }
    out.emplace_back(start, s.size());
    return out;
}

const Header* innermost_enclosing(const std::vector<Header>& headers, std::size_t offset,
                                  std::optional<AttachKind> only = std::nullopt)
{
    const Header* best = nullptr;
    for (const auto& h : headers) {
        if (h.open == std::string_view::npos || h.close == std::string_view::npos)
            continue;
        if (only && h.kind != *only)
            continue;
        if (h.open < offset && offset < h.close && (!best || h.open > best->open))
            best = &h;
    }
    return best;
}

const Header* next_within(const std::vector<Header>& headers, std::size_t after, int last_line,
                          std::initializer_list<AttachKind> kinds)
{
    for (const auto& h : headers) {
        if (h.begin < after)
            continue;
        if (h.line > last_line + kAttachWindow)
            return nullptr;
        if (std::find(kinds.begin(), kinds.end(), h.kind) != kinds.end())
            return &h;
    }
    return nullptr;
}

AttachTarget target_of(const Header* h)
{
    if (!h)
        return AttachTarget{};
    return AttachTarget{h->kind, h->name, h->line};
}

}  // namespace

std::vector<SpecClause> extract_annotations(std::string_view source, Dialect dialect, Diagnostics* diag)
{
    if (dialect == Dialect::DafnyNative)
        throw std::invalid_argument("Dafny clauses are native syntax; use parse_dafny");

    text::LineIndex lines(source);
    std::vector<Comment> comments = find_annotation_comments(source, lines);
    if (comments.empty())
        return {};
    std::string blank = blank_comments_and_literals(source);
    std::vector<Header> headers = find_headers(blank, lines);

    // Consecutive annotation comments separated only by whitespace form one
    // group; attachment is measured from the end of the group.
    std::vector<std::size_t> group_end(comments.size());
    for (std::size_t i = comments.size(); i-- > 0;) {
        group_end[i] = comments[i].end;
        if (i + 1 < comments.size()) {
            std::string_view gap = source.substr(comments[i].end, comments[i + 1].begin - comments[i].end);
            if (text::trim(gap).empty())
                group_end[i] = group_end[i + 1];
        }
    }

    std::vector<SpecClause> out;
    for (std::size_t ci = 0; ci < comments.size(); ++ci) {
        const Comment& cm = comments[ci];
        std::size_t gend = group_end[ci];
        int last_line = lines.line_of(gend == 0 ? 0 : gend - 1);

        for (auto [b, e] : split_clauses(cm.content)) {
            std::string_view piece = std::string_view(cm.content).substr(b, e - b);
            std::size_t lead = 0;
            while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead])))
                ++lead;
            if (lead == piece.size())
                continue;
            std::size_t kw_begin = lead;
            std::size_t pos = lead;
            auto read_word = [&](std::size_t at) {
                std::size_t k = at;
                while (k < piece.size() && (text::is_ident_char(piece[k]) || piece[k] == '\\'))
                    ++k;
                return piece.substr(at, k - at);
            };
            std::string_view word = read_word(pos);
            if (dialect == Dialect::JML) {
                while (word == "public" || word == "private" || word == "protected" || word == "static" ||
                       word == "instance") {
                    pos = skip_space(piece, pos + word.size());
                    kw_begin = pos;
                    word = read_word(pos);
                }
            }
            std::string keyword(word);
            std::size_t after = pos + word.size();
            if (dialect == Dialect::ACSL && word == "loop") {
                std::size_t n = skip_space(piece, after);
                std::string_view second = read_word(n);
                if (!second.empty()) {
                    keyword += " ";
                    keyword += second;
                    after = n + second.size();
                }
            }
            if (keyword.empty()) {
                if (diag)
                    diag->warn("annotation-syntax", "clause without keyword",
                               lines.line_of(cm.begin + b + lead));
                continue;
            }
            Classified cls = classify(keyword, dialect);
            SpecClause clause;
            clause.kind = cls.kind;
            clause.keyword = keyword;
            clause.text = text::normalize_ws(piece.substr(after));
            clause.dialect = dialect;
            std::size_t abs = cm.begin + b + kw_begin;
            clause.line = lines.line_of(abs);
            clause.column = lines.column_of(abs);
            if (!cls.known && diag) {
                diag->warn("unknown-annotation-keyword", "unknown " + std::string(to_string(dialect)) +
                                                             " keyword '" + keyword + "'",
                           clause.line);
            }

            const Header* target = nullptr;
            if (cls.loop) {
                target = next_within(headers, gend, last_line, {AttachKind::Loop});
                if (!target)
                    target = innermost_enclosing(headers, cm.begin, AttachKind::Function);
            } else if (cls.kind == ClauseKind::Assert || cls.kind == ClauseKind::Assume) {
                target = innermost_enclosing(headers, cm.begin, AttachKind::Function);
            } else if (cls.kind == ClauseKind::Invariant) {
                const Header* inner = innermost_enclosing(headers, cm.begin);
                if (inner && inner->kind == AttachKind::Class)
                    target = inner;
                if (!target)
                    target = next_within(headers, gend, last_line, {AttachKind::Loop});
                if (!target)
                    target = next_within(headers, gend, last_line, {AttachKind::Class});
                if (!target)
                    target = innermost_enclosing(headers, cm.begin, AttachKind::Function);
            } else if (cls.kind == ClauseKind::Decreases) {
                target = next_within(headers, gend, last_line, {AttachKind::Loop, AttachKind::Function});
                if (!target)
                    target = innermost_enclosing(headers, cm.begin, AttachKind::Function);
            } else {
                target = next_within(headers, gend, last_line, {AttachKind::Function, AttachKind::Class});
            }
            clause.attach = target_of(target);
            out.push_back(std::move(clause));
        }
    }
    return out;
}

}  // namespace artgraph::frontend
