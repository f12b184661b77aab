#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/frontends.hpp"
#include "artgraph/text_util.hpp"

namespace artgraph::frontend {

namespace {

namespace k = kinds;

const std::vector<std::string_view> kCallables{"method", "function", "lemma", "predicate", "constructor"};
const std::vector<std::string_view> kContainers{"class", "module", "trait"};
const std::vector<std::string_view> kModifiers{"ghost", "static", "twostate", "opaque", "abstract"};
const std::vector<std::string_view> kItemWords{
    "method", "function", "lemma", "predicate", "constructor", "class", "module", "trait",
    "datatype", "codatatype", "const", "var", "import", "type", "newtype", "include", "ghost", "static",
    "iterator",
};
const std::vector<std::string_view> kSignatureSpecs{"requires", "ensures", "modifies", "reads", "decreases"};
const std::vector<std::string_view> kLoopSpecs{"invariant", "decreases", "modifies"};

bool contains(const std::vector<std::string_view>& v, std::string_view w)
{
    return std::find(v.begin(), v.end(), w) != v.end();
}

class DafnyParser {
public:
    DafnyParser(std::string_view src, Diagnostics* diag)
        : src_(src), blank_(blank_comments_and_literals(src)), lines_(src), diag_(diag)
    {}

    DafnyParse run()
    {
        check_balance();
        DafnyParse out;
        out.tree = SyntaxTree(std::string(k::kFile), "", Span{1, 1});
        out.tree.begin = 0;
        out.tree.end = src_.size();
        parse_items(0, src_.size(), out.tree);
        out.clauses = std::move(clauses_);
        std::stable_sort(out.clauses.begin(), out.clauses.end(),
                         [](const SpecClause& a, const SpecClause& b) {
                             return std::pair(a.line, a.column) < std::pair(b.line, b.column);
                         });
        return out;
    }

private:
    void check_balance() const
    {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < blank_.size(); ++i) {
            if (blank_[i] == '{') {
                open.push_back(i);
            } else if (blank_[i] == '}') {
                if (open.empty())
                    throw ParseError("unmatched '}'", lines_.line_of(i));
                open.pop_back();
            }
        }
        if (!open.empty())
            throw ParseError("unmatched '{'", lines_.line_of(open.back()));
    }

    Span span_at(std::size_t off) const { return Span{lines_.line_of(off), lines_.column_of(off)}; }

    SyntaxTree make(std::string_view kind, std::string label, std::size_t b, std::size_t e) const
    {
        SyntaxTree n(std::string(kind), std::move(label), span_at(b));
        n.begin = b;
        n.end = e;
        return n;
    }

    std::size_t skip_ws(std::size_t i, std::size_t end) const
    {
        while (i < end && std::isspace(static_cast<unsigned char>(blank_[i])))
            ++i;
        return i;
    }

    std::string_view word_at(std::size_t i, std::size_t end) const
    {
        std::size_t j = i;
        while (j < end && (text::is_ident_char(blank_[j]) || (j > i && blank_[j] == '\'')))
            ++j;
        return std::string_view(blank_).substr(i, j - i);
    }

    bool is_word_boundary(std::size_t i) const { return i == 0 || !text::is_ident_char(blank_[i - 1]); }

    std::size_t match_brace(std::size_t open) const
    {
        int depth = 0;
        for (std::size_t i = open; i < blank_.size(); ++i) {
            if (blank_[i] == '{') {
                ++depth;
            } else if (blank_[i] == '}' && --depth == 0) {
                return i;
            }
        }
        throw ParseError("no matching '}' for '{'", lines_.line_of(open));
    }

    /// First offset in [i, end) at bracket depth 0 holding '{' or ';', or one
    /// of `words` at a word boundary.
    std::size_t find_top(std::size_t i, std::size_t end, const std::vector<std::string_view>& words,
                         bool stop_at_brace, bool stop_at_semi) const
    {
        int depth = 0;
        for (; i < end; ++i) {
            char c = blank_[i];
            if (c == '(' || c == '[') {
                ++depth;
            } else if (c == ')' || c == ']') {
                depth = std::max(0, depth - 1);
            } else if (depth == 0) {
                if (stop_at_brace && c == '{')
                    return i;
                if (stop_at_semi && c == ';')
                    return i;
                if (text::is_ident_start(c) && is_word_boundary(i) && contains(words, word_at(i, end)))
                    return i;
            }
        }
        return end;
    }

    std::string norm(std::size_t b, std::size_t e) const
    {
        if (e <= b)
            return {};
        return text::normalize_ws(src_.substr(b, e - b));
    }

    void add_clause(std::string_view keyword, std::size_t kw_at, std::size_t text_end, AttachKind kind,
                    const std::string& name, int line)
    {
        SpecClause c;
        c.keyword = std::string(keyword);
        if (keyword == "requires")
            c.kind = ClauseKind::Requires;
        else if (keyword == "ensures")
            c.kind = ClauseKind::Ensures;
        else if (keyword == "invariant")
            c.kind = ClauseKind::Invariant;
        else if (keyword == "decreases")
            c.kind = ClauseKind::Decreases;
        else if (keyword == "assert")
            c.kind = ClauseKind::Assert;
        else if (keyword == "assume")
            c.kind = ClauseKind::Assume;
        else
            c.kind = ClauseKind::Other;
        std::string body = norm(kw_at + keyword.size(), text_end);
        while (!body.empty() && body.back() == ';')
            body.pop_back();
        c.text = std::string(text::trim(body));
        c.dialect = Dialect::DafnyNative;
        c.line = lines_.line_of(kw_at);
        c.column = lines_.column_of(kw_at);
        c.attach = AttachTarget{kind, name, line};
        clauses_.push_back(std::move(c));
    }

    /// Clauses in [b, e) introduced by any of `words`, each running to the
    /// next keyword.
    void collect_clauses(std::size_t b, std::size_t e, const std::vector<std::string_view>& words,
                         AttachKind kind, const std::string& name, int line)
    {
        std::size_t i = find_top(b, e, words, false, false);
        while (i < e) {
            std::string_view kw = word_at(i, e);
            std::size_t next = find_top(i + kw.size(), e, words, false, false);
            add_clause(kw, i, next, kind, name, line);
            i = next;
        }
    }

    std::size_t item_end(std::size_t i, std::size_t end) const
    {
        int depth = 0;
        for (std::size_t j = i; j < end; ++j) {
            char c = blank_[j];
            if (c == '(' || c == '[' || c == '{') {
                if (c == '{' && depth == 0)
                    return match_brace(j) + 1;
                ++depth;
            } else if (c == ')' || c == ']' || c == '}') {
                depth = std::max(0, depth - 1);
            } else if (depth == 0 && c == ';') {
                return j + 1;
            } else if (depth == 0 && c == '\n') {
                std::size_t n = skip_ws(j + 1, end);
                if (n < end && contains(kItemWords, word_at(n, end)))
                    return j;
            }
        }
        return end;
    }

    void parse_items(std::size_t b, std::size_t e, SyntaxTree& parent)
    {
        std::size_t i = skip_ws(b, e);
        while (i < e) {
            std::size_t start = i;
            std::string_view w = word_at(i, e);
            while (contains(kModifiers, w)) {
                i = skip_ws(i + w.size(), e);
                w = word_at(i, e);
            }
            if (contains(kCallables, w)) {
                i = parse_callable(start, i, e, parent);
            } else if (contains(kContainers, w)) {
                i = parse_container(start, i, e, parent);
            } else if (w.empty() && i < e && blank_[i] == '}') {
                ++i;
            } else {
                std::size_t end = item_end(i, e);
                if (end == i)
                    end = i + 1;
                std::string label = norm(start, end);
                if (!label.empty() && label.back() == ';')
                    label.pop_back();
                parent.add(make(k::kStatement, label, start, end));
                i = end;
            }
            i = skip_ws(i, e);
        }
    }

    std::size_t parse_container(std::size_t start, std::size_t kw, std::size_t e, SyntaxTree& parent)
    {
        std::string_view w = word_at(kw, e);
        std::size_t n = skip_ws(kw + w.size(), e);
        std::string name(word_at(n, e));
        std::size_t open = find_top(n, e, {}, true, false);
        if (open >= e) {
            parent.add(make(k::kStatement, norm(start, e), start, e));
            return e;
        }
        std::size_t close = match_brace(open);
        SyntaxTree cls = make(k::kClassDecl, name, start, close + 1);
        cls.type = std::string(w);
        parse_items(open + 1, close, cls);
        parent.add(std::move(cls));
        return close + 1;
    }

    std::size_t parse_callable(std::size_t start, std::size_t kw, std::size_t e, SyntaxTree& parent)
    {
        std::string_view w = word_at(kw, e);
        std::size_t i = skip_ws(kw + w.size(), e);
        std::string keyword(w);
        // `function method`, `predicate method`
        if (word_at(i, e) == "method" && (w == "function" || w == "predicate")) {
            keyword += " method";
            i = skip_ws(i + 6, e);
        }
        std::size_t sig_begin = i;
        std::string name(word_at(i, e));
        if (w == "constructor" && (name.empty() || blank_[i] == '('))
            name = "constructor";

        std::size_t spec_at = find_top(i, e, kSignatureSpecs, true, false);
        std::size_t sig_end = spec_at;
        while (sig_end > sig_begin && std::isspace(static_cast<unsigned char>(blank_[sig_end - 1])))
            --sig_end;
        std::string label = norm(sig_begin, sig_end);
        // `increment (x: int)` and `increment(x: int)` label alike
        if (auto p = label.find(" ("); p != std::string::npos && p == name.size())
            label.erase(p, 1);
        if (label.empty())
            label = name;

        std::size_t open = find_top(spec_at, e, {}, true, false);
        // Without a body the item ends at the next top-level item word.
        std::size_t spec_end = open;
        if (open >= e) {
            spec_end = item_end(spec_at, e);
        }

        SyntaxTree m = make(k::kMethodDecl, label, start, spec_end);
        m.type = keyword;
        int line = m.span.line;
        collect_clauses(spec_at, spec_end, kSignatureSpecs, AttachKind::Function, name, line);

        if (open >= e) {
            parent.add(std::move(m));
            return spec_end;
        }
        std::size_t close = match_brace(open);
        m.end = close + 1;
        SyntaxTree body = make(k::kCompoundStmt, "", open, close + 1);
        Owner owner{AttachKind::Function, name, line};
        if (w == "function" || w == "predicate") {
            std::string expr = norm(open + 1, close);
            if (!expr.empty()) {
                std::size_t b = skip_ws(open + 1, close);
                body.add(make(k::kReturnStmt, expr, b, close));
            }
        } else {
            parse_statements(open + 1, close, body, owner);
        }
        m.add(std::move(body));
        parent.add(std::move(m));
        return close + 1;
    }

    struct Owner {
        AttachKind kind;
        std::string name;
        int line;
    };

    SyntaxTree parse_block(std::size_t open, const Owner& owner)
    {
        std::size_t close = match_brace(open);
        SyntaxTree block = make(k::kCompoundStmt, "", open, close + 1);
        parse_statements(open + 1, close, block, owner);
        return block;
    }

    std::size_t parse_if(std::size_t at, std::size_t e, SyntaxTree& parent, const Owner& owner)
    {
        std::size_t cond_b = skip_ws(at + 2, e);
        std::size_t open = find_top(cond_b, e, {}, true, false);
        if (open >= e) {
            if (diag_)
                diag_->warn("dafny-statement", "if without block", lines_.line_of(at));
            std::size_t end = item_end(at, e);
            parent.add(make(k::kStatement, norm(at, end), at, end));
            return end;
        }
        SyntaxTree n = make(k::kIfStmt, norm(cond_b, open), at, 0);
        n.add(parse_block(open, owner));
        std::size_t i = skip_ws(match_brace(open) + 1, e);
        if (word_at(i, e) == "else" && is_word_boundary(i)) {
            std::size_t j = skip_ws(i + 4, e);
            if (word_at(j, e) == "if") {
                i = parse_if(j, e, n, owner);
            } else if (j < e && blank_[j] == '{') {
                n.add(parse_block(j, owner));
                i = match_brace(j) + 1;
            }
        }
        n.end = i;
        parent.add(std::move(n));
        return i;
    }

    std::size_t parse_loop(std::size_t at, std::string_view kw, std::size_t e, SyntaxTree& parent)
    {
        std::size_t cond_b = skip_ws(at + kw.size(), e);
        std::size_t spec_at = find_top(cond_b, e, kLoopSpecs, true, false);
        std::size_t cond_e = spec_at;
        std::size_t open = find_top(spec_at, e, {}, true, false);
        if (open >= e) {
            std::size_t end = item_end(at, e);
            parent.add(make(k::kStatement, norm(at, end), at, end));
            return end;
        }
        SyntaxTree n = make(kw == "while" ? k::kWhileStmt : k::kForStmt, norm(cond_b, cond_e), at, 0);
        Owner loop{AttachKind::Loop, std::string(kw), n.span.line};
        collect_clauses(spec_at, open, kLoopSpecs, AttachKind::Loop, loop.name, loop.line);
        n.add(parse_block(open, loop));
        std::size_t end = match_brace(open) + 1;
        n.end = end;
        parent.add(std::move(n));
        return end;
    }

    void parse_statements(std::size_t b, std::size_t e, SyntaxTree& parent, const Owner& owner)
    {
        std::size_t i = skip_ws(b, e);
        while (i < e) {
            std::string_view w = word_at(i, e);
            if (w == "if") {
                i = parse_if(i, e, parent, owner);
            } else if (w == "while" || w == "for") {
                i = parse_loop(i, w, e, parent);
            } else if (w == "assert" || w == "assume") {
                std::size_t end = item_end(i, e);
                std::size_t text_end = end;
                if (text_end > i && blank_[text_end - 1] == ';')
                    --text_end;
                add_clause(w, i, text_end, owner.kind, owner.name, owner.line);
                i = end;
            } else if (w == "return") {
                std::size_t end = find_top(i, e, {}, false, true);
                std::size_t stop = std::min(end + 1, e);
                parent.add(make(k::kReturnStmt, norm(i + 6, end), i, stop));
                i = stop;
            } else if (i < e && blank_[i] == '{') {
                parent.add(parse_block(i, owner));
                i = match_brace(i) + 1;
            } else if (i < e && blank_[i] == ';') {
                ++i;
            } else {
                std::size_t end = find_top(i, e, {}, true, true);
                if (end < e && blank_[end] == '{') {
                    // block statement (match, forall, calc, ...): header plus recursed body
                    SyntaxTree n = make(k::kStatement, norm(i, end), i, 0);
                    n.add(parse_block(end, owner));
                    n.end = match_brace(end) + 1;
                    i = n.end;
                    parent.add(std::move(n));
                } else {
                    std::size_t stop = std::min(end + 1, e);
                    std::string label = norm(i, end);
                    if (label.empty())
                        label = norm(i, stop);
                    parent.add(make(k::kStatement, label, i, stop));
                    i = stop;
                }
            }
            i = skip_ws(i, e);
        }
    }

    std::string_view src_;
    std::string blank_;
    text::LineIndex lines_;
    Diagnostics* diag_;
    std::vector<SpecClause> clauses_;
};

}  // namespace

DafnyParse parse_dafny(std::string_view source, Diagnostics* diag)
{
    return DafnyParser(source, diag).run();
}

}  // namespace artgraph::frontend
