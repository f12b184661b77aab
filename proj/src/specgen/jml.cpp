#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <tuple>

#include "artgraph/frontends.hpp"
#include "artgraph/specgen.hpp"
#include "artgraph/text_util.hpp"
#include "common.hpp"

namespace artgraph::specgen {

namespace {

using namespace detail;
namespace k = kinds;

using TargetKey = std::tuple<AttachKind, std::string, int>;

const std::set<std::string> kNumeric{"int", "long", "short", "byte", "float", "double"};
const std::set<std::string> kPrimitive{"int", "long", "short", "byte", "float", "double", "char", "boolean"};

std::string remove_preprocessor_lines(std::string_view src)
{
    std::string out;
    std::size_t i = 0;
    while (i < src.size()) {
        std::size_t e = src.find('\n', i);
        std::size_t next = e == std::string_view::npos ? src.size() : e + 1;
        std::string_view line = src.substr(i, next - i);
        if (!text::trim(line).starts_with("#"))
            out.append(line);
        i = next;
    }
    return out;
}

/// Type text without modifiers such as `final`.
std::string bare_type(const std::string& type)
{
    std::string t = type;
    for (std::string_view m : {"final ", "static "})
        while (t.starts_with(m))
            t.erase(0, m.size());
    return t;
}

bool is_reference_type(const std::string& type)
{
    std::string t = bare_type(type);
    return !t.empty() && !kPrimitive.contains(t) && t != "void";
}

std::vector<std::string> name_words(const std::string& name)
{
    std::vector<std::string> words;
    std::string cur;
    for (char c : name) {
        if (c == '_') {
            if (!cur.empty())
                words.push_back(cur);
            cur.clear();
            continue;
        }
        if (std::isupper(static_cast<unsigned char>(c)) && !cur.empty()) {
            words.push_back(cur);
            cur.clear();
        }
        cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (!cur.empty())
        words.push_back(cur);
    return words;
}

/// Result guarantee implied by the method name, if any.
std::optional<std::string> result_guarantee(const std::string& name)
{
    auto words = name_words(name);
    if (words.empty())
        return std::nullopt;
    static const std::set<std::string> kSize{"length", "size", "count"};
    if (kSize.contains(words.front()) || kSize.contains(words.back()))
        return std::string("\\result >= 0");
    bool has_index = std::find(words.begin(), words.end(), "index") != words.end();
    if (has_index || (words.size() == 1 && words.front() == "find"))
        return std::string("\\result >= -1");
    return std::nullopt;
}

SpecClause jml_clause(ClauseKind kind, std::string keyword, std::string text, const AttachTarget& target)
{
    SpecClause c;
    c.kind = kind;
    c.keyword = std::move(keyword);
    c.text = std::move(text);
    c.attach = target;
    c.dialect = Dialect::JML;
    return c;
}

std::string render(const SpecClause& c)
{
    return "//@ " + c.keyword + " " + c.text + ";";
}

class JmlGenerator {
public:
    JmlGenerator(std::string_view src, std::set<TargetKey> existing)
        : src_(src), blank_(frontend::blank_comments_and_literals(src)), lines_(src), existing_(std::move(existing))
    {}

    GenResult run(const SyntaxTree& tree)
    {
        visit(tree);
        std::stable_sort(pending_.begin(), pending_.end(), [](const auto& a, const auto& b) {
            return std::pair(a.second.before_line, a.second.order) < std::pair(b.second.before_line, b.second.order);
        });
        GenResult out;
        std::vector<Insertion> ins;
        for (auto& [contract, insertion] : pending_) {
            ins.push_back(insertion);
            out.contracts.push_back(std::move(contract));
        }
        out.text = apply_insertions(src_, std::move(ins));
        return out;
    }

private:
    bool exists(const AttachTarget& t) const { return existing_.contains({t.kind, t.name, t.line}); }

    void visit(const SyntaxTree& n)
    {
        for (const auto& c : n.children) {
            if (c.kind == k::kClassDecl || c.kind == k::kStructDecl) {
                class_invariants(c);
                for (const auto& m : c.children)
                    if (m.kind == k::kMethodDecl)
                        method_contract(c, m);
                visit(c);
            }
        }
    }

    std::size_t class_open_brace(const SyntaxTree& cls) const
    {
        std::size_t p = cls.begin;
        int depth = 0;
        for (; p < blank_.size(); ++p) {
            if (blank_[p] == '(')
                ++depth;
            else if (blank_[p] == ')')
                --depth;
            else if (blank_[p] == '{' && depth == 0)
                return p;
        }
        return std::string_view::npos;
    }

    void class_invariants(const SyntaxTree& cls)
    {
        AttachTarget target{AttachKind::Class, cls.label, cls.span.line};
        std::vector<SpecClause> clauses;
        std::vector<bool> is_static;
        for (const auto& f : cls.children) {
            if (f.kind != k::kFieldDecl)
                continue;
            std::string head(src_.substr(f.begin, f.end - f.begin));
            bool st = false;
            {
                std::size_t name_at = head.find(f.label);
                std::string before = name_at == std::string::npos ? head : head.substr(0, name_at);
                for (std::size_t i = 0; i + 6 <= before.size(); ++i)
                    if (before.compare(i, 6, "static") == 0 &&
                        (i == 0 || !text::is_ident_char(before[i - 1])) &&
                        (i + 6 == before.size() || !text::is_ident_char(before[i + 6])))
                        st = true;
            }
            std::string type = bare_type(f.type);
            std::string text;
            if (kNumeric.contains(type))
                text = f.label + " >= 0";
            else if (type == "boolean")
                text = f.label + " == true || " + f.label + " == false";
            else if (is_reference_type(type))
                text = f.label + " != null";
            else
                continue;
            std::string keyword = st ? "public static invariant" : "public invariant";
            bool dup = false;
            for (const auto& c : clauses)
                dup = dup || (c.text == text && c.keyword == keyword);
            if (!dup)
                clauses.push_back(jml_clause(ClauseKind::Invariant, keyword, text, target));
        }
        if (clauses.empty() || exists(target))
            return;

        std::size_t open = class_open_brace(cls);
        if (open == std::string_view::npos)
            return;
        std::size_t eol = src_.find('\n', open);
        std::string_view after = src_.substr(open + 1, (eol == std::string_view::npos ? src_.size() : eol) - open - 1);
        std::string base_indent = text::indentation_at(src_, cls.begin);
        Insertion ins;
        if (text::trim(after).empty() && eol != std::string_view::npos) {
            ins.before_line = lines_.line_of(open) + 1;
            ins.order = 0;
            std::string indent = base_indent + "    ";
            // follow the indentation of the first member when there is one
            std::size_t next = eol + 1;
            std::size_t ws = next;
            while (ws < src_.size() && (src_[ws] == ' ' || src_[ws] == '\t'))
                ++ws;
            if (ws < src_.size() && src_[ws] != '\n' && src_[ws] != '}' && ws > next)
                indent = std::string(src_.substr(next, ws - next));
            for (const auto& c : clauses)
                ins.lines.push_back(indent + render(c));
        } else {
            ins.before_line = cls.span.line;
            ins.order = 1;
            for (const auto& c : clauses)
                ins.lines.push_back(base_indent + render(c));
        }
        GeneratedContract gc;
        gc.target = target;
        gc.insertion = cls.span.line;
        gc.clauses = clauses;
        pending_.emplace_back(std::move(gc), std::move(ins));
    }

    void method_contract(const SyntaxTree& cls, const SyntaxTree& m)
    {
        AttachTarget target{AttachKind::Function, m.label, m.span.line};
        if (m.span.line == cls.span.line || lines_.line_of(class_open_brace(cls)) == m.span.line)
            return;  // member shares a line with its class header
        std::vector<SpecClause> clauses;
        for (const auto& p : m.children) {
            if (p.kind == k::kVarDecl && is_reference_type(p.type))
                clauses.push_back(jml_clause(ClauseKind::Requires, "requires", p.label + " != null", target));
        }
        std::string ret = bare_type(m.type);
        if (ret == "int" || ret == "long" || ret == "short" || ret == "byte") {
            if (auto g = result_guarantee(m.label))
                clauses.push_back(jml_clause(ClauseKind::Ensures, "ensures", *g, target));
        }
        clauses.push_back(jml_clause(ClauseKind::Assignable, "assignable", "\\everything", target));
        if (exists(target))
            return;

        // place the block above any annotations that precede the header
        int line = m.span.line;
        while (line > 1) {
            std::size_t b = lines_.line_start(line - 1);
            std::size_t e = src_.find('\n', b);
            std::string_view prev = text::trim(src_.substr(b, e - b));
            if (!prev.starts_with("@"))
                break;
            --line;
        }
        Insertion ins;
        ins.before_line = line;
        ins.order = 1;
        std::string indent = text::indentation_at(src_, m.begin);
        for (const auto& c : clauses)
            ins.lines.push_back(indent + render(c));
        GeneratedContract gc;
        gc.target = target;
        gc.insertion = m.span.line;
        gc.clauses = std::move(clauses);
        pending_.emplace_back(std::move(gc), std::move(ins));
    }

    std::string_view src_;
    std::string blank_;
    text::LineIndex lines_;
    std::set<TargetKey> existing_;
    std::vector<std::pair<GeneratedContract, Insertion>> pending_;
};

}  // namespace

GenResult gen_jml(std::string_view source, Diagnostics* diag)
{
    std::string clean = remove_preprocessor_lines(source);
    SyntaxTree tree;
    std::set<TargetKey> existing;
    try {
        tree = frontend::parse_java(clean, diag);
        for (const auto& c : frontend::extract_annotations(clean, Dialect::JML, nullptr))
            existing.insert({c.attach.kind, c.attach.name, c.attach.line});
    } catch (const frontend::ParseError& e) {
        if (diag)
            diag->warn("jml-skip", std::string("file not parsed: ") + e.what(), e.line());
        return GenResult{clean, {}};
    }
    return JmlGenerator(clean, std::move(existing)).run(tree);
}

}  // namespace artgraph::specgen
