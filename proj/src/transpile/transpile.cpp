#include "artgraph/transpile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <set>

#include "artgraph/frontends.hpp"
#include "artgraph/text_util.hpp"

namespace artgraph::transpile {

namespace {

const std::vector<RewriteRule> kJavaRules{
    {"preprocessor", "#include / #define / other directives", "removed; integer #define becomes static final int", RuleScope::Line},
    {"struct", "struct S { ... }; and typedef struct", "static class S { ... }", RuleScope::Block},
    {"prototype", "function declaration without body", "removed", RuleScope::Line},
    {"main", "int main(...)", "public static void main(String[] args)", RuleScope::Line},
    {"function", "free function definition", "public static method", RuleScope::Line},
    {"declaration", "char* / char[] / T[] / struct S declarations", "String / T[] / S with initializers", RuleScope::Line},
    {"printf", "printf(fmt, args)", "System.out.println / print with string concatenation", RuleScope::Line},
    {"scanf", "scanf(fmt, &a, ...)", "one typed Scanner read per conversion", RuleScope::Line},
    {"library", "strlen, strcmp, strcpy, strcat, puts, putchar, math and ctype calls", "String, Math and Character methods", RuleScope::Line},
    {"arrow", "p->f", "p.f", RuleScope::Line},
    {"null", "NULL", "null", RuleScope::Line},
    {"main-return", "return expr; inside main", "return;", RuleScope::Line},
    {"fallback", "anything else outside the subset", "original line behind // TODO(transpile)", RuleScope::Line},
    {"wrap", "whole file", "import java.util.*; public class <Name> with one shared Scanner", RuleScope::File},
};

const std::vector<RewriteRule> kCSharpRules{
    {"preprocessor", "#include / #define / other directives", "removed; using System; emitted once; integer #define becomes const int", RuleScope::Line},
    {"struct", "struct S { ... }; and typedef struct", "struct S { public fields }", RuleScope::Block},
    {"prototype", "function declaration without body", "removed", RuleScope::Line},
    {"main", "int main(...)", "static void Main(string[] args)", RuleScope::Line},
    {"function", "free function definition", "static method", RuleScope::Line},
    {"declaration", "char* / char[] / T[] / struct S declarations", "string / T[] / S with initializers", RuleScope::Line},
    {"printf", "printf(fmt, args)", "Console.WriteLine / Write with composite format", RuleScope::Line},
    {"scanf", "scanf(fmt, &a, ...)", "one T.Parse(Console.ReadLine()) per conversion", RuleScope::Line},
    {"library", "strlen, strcmp, strcpy, strcat, puts, putchar, math and ctype calls", "string, Math and char members", RuleScope::Line},
    {"arrow", "p->f", "p.f", RuleScope::Line},
    {"null", "NULL", "null", RuleScope::Line},
    {"main-return", "return expr; inside main", "return;", RuleScope::Line},
    {"fallback", "anything else outside the subset", "original line behind // TODO(transpile)", RuleScope::Line},
    {"wrap", "whole file", "using System; class <Name>", RuleScope::File},
};

const std::set<std::string> kQualifiers{"const", "static", "unsigned", "signed", "long", "short",
                                        "volatile", "register", "extern", "inline"};
const std::set<std::string> kBaseTypes{"int", "char", "float", "double", "void", "bool", "_Bool", "size_t"};
const std::set<std::string> kUnconvertible{
    "malloc", "calloc", "realloc", "free", "memset", "memcpy", "memmove", "sizeof", "fopen", "fclose",
    "fprintf", "fscanf", "fgets", "gets", "getchar", "fputs", "fputc", "sprintf", "sscanf", "snprintf",
    "rand", "srand", "time", "goto", "union", "typedef", "enum", "stderr", "stdin", "stdout", "FILE"};

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Call {
    std::size_t start = std::string::npos;  ///< first character of the callee name
    std::size_t open = 0;
    std::size_t close = 0;                  ///< matching ')'
};

std::string mask_of(std::string_view line) { return frontend::blank_comments_and_literals(line); }

bool word_at(std::string_view s, std::size_t pos, std::string_view word)
{
    if (s.compare(pos, word.size(), word) != 0)
        return false;
    if (pos > 0 && text::is_ident_char(s[pos - 1]))
        return false;
    std::size_t after = pos + word.size();
    return after >= s.size() || !text::is_ident_char(s[after]);
}

bool has_word(std::string_view s, std::string_view word)
{
    for (std::size_t p = s.find(word); p != std::string_view::npos; p = s.find(word, p + 1))
        if (word_at(s, p, word))
            return true;
    return false;
}

std::string replace_words_in_mask(const std::string& line, const std::string& mask, std::string_view from,
                                  std::string_view to)
{
    std::string out;
    std::size_t last = 0;
    for (std::size_t p = mask.find(from); p != std::string::npos; p = mask.find(from, p + from.size())) {
        if (!word_at(mask, p, from))
            continue;
        out.append(line, last, p - last);
        out.append(to);
        last = p + from.size();
    }
    out.append(line, last, std::string::npos);
    return out;
}

std::optional<Call> find_call(const std::string& mask, std::string_view name, std::size_t from = 0)
{
    for (std::size_t p = mask.find(name, from); p != std::string::npos; p = mask.find(name, p + 1)) {
        if (!word_at(mask, p, name))
            continue;
        if (p > 0 && mask[p - 1] == '.')
            continue;
        std::size_t q = p + name.size();
        while (q < mask.size() && mask[q] == ' ')
            ++q;
        if (q >= mask.size() || mask[q] != '(')
            continue;
        int depth = 0;
        for (std::size_t i = q; i < mask.size(); ++i) {
            if (mask[i] == '(')
                ++depth;
            else if (mask[i] == ')' && --depth == 0)
                return Call{p, q, i};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

/// Top-level comma separated pieces of `line[begin, end)`, trimmed.
std::vector<std::string> split_top(const std::string& line, const std::string& mask, std::size_t begin,
                                   std::size_t end)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = begin;
    for (std::size_t i = begin; i < end; ++i) {
        char c = mask[i];
        if (c == '(' || c == '[' || c == '{')
            ++depth;
        else if (c == ')' || c == ']' || c == '}')
            --depth;
        else if (c == ',' && depth == 0) {
            out.emplace_back(text::trim(std::string_view(line).substr(start, i - start)));
            start = i + 1;
        }
    }
    std::string last(text::trim(std::string_view(line).substr(start, end - start)));
    if (!last.empty() || !out.empty())
        out.push_back(last);
    return out;
}

bool is_simple_expr(const std::string& e)
{
    static const std::regex kSimple(R"(^(?:[A-Za-z_][\w\.]*(?:\[[^\]]*\])*|[A-Za-z_]\w*\([^()]*\)|-?\d[\w\.]*|"[^"]*"|'[^']*')$)");
    return std::regex_match(e, kSimple);
}

std::string paren(const std::string& e) { return is_simple_expr(e) ? e : "(" + e + ")"; }

struct FormatPiece {
    bool is_arg = false;
    std::string text;  ///< literal text with C escapes kept, or the conversion
};

/// Splits a format literal body into text and conversions. Conversions
/// outside `allowed` make the result empty.
std::optional<std::vector<FormatPiece>> parse_format(std::string_view body, const std::set<std::string>& allowed)
{
    std::vector<FormatPiece> out;
    std::string lit;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '\\' && i + 1 < body.size()) {
            lit += c;
            lit += body[++i];
            continue;
        }
        if (c != '%') {
            lit += c;
            continue;
        }
        if (i + 1 < body.size() && body[i + 1] == '%') {
            lit += '%';
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < body.size() && !std::isalpha(static_cast<unsigned char>(body[j])))
            ++j;
        while (j < body.size() && (body[j] == 'l' || body[j] == 'h'))
            ++j;
        if (j >= body.size())
            return std::nullopt;
        std::string conv(body.substr(i + 1, j - i));
        if (!allowed.contains(conv))
            return std::nullopt;
        if (!lit.empty())
            out.push_back({false, lit});
        lit.clear();
        out.push_back({true, conv});
        i = j;
    }
    if (!lit.empty())
        out.push_back({false, lit});
    return out;
}

struct Declarator {
    int stars = 0;
    std::string name;
    std::vector<std::string> dims;
    std::optional<std::string> init;
};

std::optional<Declarator> parse_declarator(const std::string& d)
{
    static const std::regex kDecl(R"(^\s*(\**)\s*([A-Za-z_]\w*)\s*((?:\[[^\]]*\]\s*)*)(?:=\s*([\s\S]*?))?\s*$)");
    std::smatch m;
    if (!std::regex_match(d, m, kDecl))
        return std::nullopt;
    Declarator out;
    out.stars = static_cast<int>(m[1].length());
    out.name = m[2].str();
    std::string dims = m[3].str();
    for (std::size_t p = dims.find('['); p != std::string::npos; p = dims.find('[', p + 1)) {
        std::size_t q = dims.find(']', p);
        out.dims.emplace_back(text::trim(std::string_view(dims).substr(p + 1, q - p - 1)));
    }
    if (m[4].matched)
        out.init = std::string(text::trim(m[4].str()));
    return out;
}

enum class DeclContext { Local, Global, Field, Param };

struct TypeWords {
    std::vector<std::string> words;
    std::string struct_name;
    std::size_t end = 0;  ///< offset just after the last type word
    bool is_const = false;
};

class Converter {
public:
    Converter(std::string_view source, std::string class_name, Target target, Diagnostics* diag)
        : target_(target), class_name_(std::move(class_name)), diag_(diag)
    {
        std::string src(source);
        src.erase(std::remove(src.begin(), src.end(), '\r'), src.end());
        lines_ = text::split_lines(src);
        std::string blank = frontend::blank_comments_and_literals(src);
        masks_ = text::split_lines(blank);
        masks_.resize(lines_.size());
        find_structs();
    }

    std::string run()
    {
        int depth = 0;
        bool in_main = false;
        std::size_t si = 0;  // next struct block
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            std::string line = lines_[i];
            std::string mask = masks_[i];
            int line_no = static_cast<int>(i) + 1;

            if (si < structs_.size() && structs_[si].start == i && depth == 0) {
                emit_struct(structs_[si]);
                i = structs_[si].end;
                ++si;
                continue;
            }
            std::string_view tm = text::trim(mask);
            if (tm.empty()) {
                out_.push_back(text::trim(line).empty() ? std::string() : line);
                continue;
            }
            if (tm.front() == '#') {
                preprocessor(line, line_no);
                continue;
            }
            if (depth == 0) {
                // join a header that spans lines
                int parens = count(mask, '(') - count(mask, ')');
                while (parens > 0 && i + 1 < lines_.size()) {
                    ++i;
                    line += " " + std::string(text::trim(lines_[i]));
                    mask += " " + std::string(text::trim(masks_[i]));
                    parens = count(mask, '(') - count(mask, ')');
                }
                top_level(line, mask, line_no, in_main);
            } else {
                body_line(line, line_no, in_main);
            }
            depth += count(mask, '{') - count(mask, '}');
            if (depth <= 0) {
                depth = 0;
                in_main = false;
            }
        }
        return wrap();
    }

private:
    struct StructBlock {
        std::size_t start = 0;
        std::size_t end = 0;
        std::string name;
    };

    static int count(std::string_view s, char c) { return static_cast<int>(std::count(s.begin(), s.end(), c)); }

    bool java() const { return target_ == Target::Java; }

    void find_structs()
    {
        static const std::regex kHead(R"(^\s*(typedef\s+)?struct\s*(\w*)\s*(\{)?\s*$)");
        static const std::regex kTail(R"(^\s*\}\s*(\w*)\s*;\s*$)");
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            std::smatch m;
            if (!std::regex_match(masks_[i], m, kHead))
                continue;
            std::size_t open_line = i;
            if (!m[3].matched) {
                if (i + 1 >= masks_.size() || text::trim(masks_[i + 1]) != "{")
                    continue;
                open_line = i + 1;
            }
            int depth = 0;
            std::size_t j = open_line;
            for (; j < masks_.size(); ++j) {
                depth += count(masks_[j], '{') - count(masks_[j], '}');
                if (depth == 0)
                    break;
            }
            std::smatch t;
            if (j >= masks_.size() || !std::regex_match(masks_[j], t, kTail))
                continue;
            std::string name = t[1].str();
            if (name.empty() || !m[1].matched)
                name = m[2].str().empty() ? t[1].str() : m[2].str();
            if (name.empty())
                continue;
            structs_.push_back({i, j, name});
            struct_names_.insert(name);
            if (!t[1].str().empty())
                struct_names_.insert(t[1].str());
            if (!m[2].str().empty())
                struct_names_.insert(m[2].str());
            i = j;
        }
        for (const auto& m : masks_) {
            static const std::regex kFwd(R"(struct\s+(\w+))");
            for (std::sregex_iterator it(m.begin(), m.end(), kFwd), e; it != e; ++it)
                struct_names_.insert((*it)[1].str());
        }
    }

    void todo(const std::string& line, int line_no)
    {
        std::string indent = text::indentation_at(line, 0);
        std::string_view t = text::trim(line);
        if (t.find('{') != std::string_view::npos || t.find('}') != std::string_view::npos) {
            out_.push_back(indent + std::string(kTodoMarker));
            out_.push_back(line);
        } else {
            out_.push_back(indent + std::string(kTodoMarker) + " " + std::string(t));
        }
        if (diag_)
            diag_->warn("transpile-todo", std::string(t), line_no);
    }

    void preprocessor(const std::string& line, int line_no)
    {
        static const std::regex kDefine(R"(^\s*#\s*define\s+([A-Za-z_]\w*)\s+(-?\d+|-?\d+\.\d*|"[^"]*")\s*$)");
        static const std::regex kSkip(R"(^\s*#\s*(include|pragma|ifndef|ifdef|endif|if|else|elif|undef)\b.*$)");
        std::smatch m;
        if (std::regex_match(line, m, kDefine)) {
            std::string v = m[2].str();
            std::string type = v.front() == '"' ? (java() ? "String" : "string")
                               : v.find('.') != std::string::npos ? "double"
                                                                  : "int";
            out_.push_back((java() ? "static final " : "const ") + type + " " + m[1].str() + " = " + v + ";");
            return;
        }
        if (std::regex_match(line, kSkip))
            return;
        todo(line, line_no);
    }

    /// Reads type words at the start of `mask`; empty when the line is no declaration.
    std::optional<TypeWords> type_words(const std::string& mask) const
    {
        TypeWords tw;
        std::size_t p = 0;
        bool has_base = false;
        while (true) {
            while (p < mask.size() && std::isspace(static_cast<unsigned char>(mask[p])))
                ++p;
            std::size_t q = p;
            while (q < mask.size() && text::is_ident_char(mask[q]))
                ++q;
            if (q == p)
                break;
            std::string w = mask.substr(p, q - p);
            if (w == "struct") {
                std::size_t r = q;
                while (r < mask.size() && mask[r] == ' ')
                    ++r;
                std::size_t s = r;
                while (s < mask.size() && text::is_ident_char(mask[s]))
                    ++s;
                if (s == r)
                    return std::nullopt;
                tw.struct_name = mask.substr(r, s - r);
                has_base = true;
                p = s;
                tw.end = p;
                continue;
            }
            if (kQualifiers.contains(w)) {
                if (w == "const")
                    tw.is_const = true;
                else
                    tw.words.push_back(w);
                if (w == "long" || w == "short" || w == "unsigned" || w == "signed")
                    has_base = true;
            } else if (kBaseTypes.contains(w)) {
                if (has_base && tw.struct_name.empty() &&
                    std::none_of(tw.words.begin(), tw.words.end(),
                                 [](const std::string& x) { return x == "long" || x == "short" || x == "unsigned" || x == "signed"; }))
                    break;
                tw.words.push_back(w);
                has_base = true;
            } else if (!has_base && struct_names_.contains(w)) {
                tw.struct_name = w;
                has_base = true;
            } else {
                break;
            }
            p = q;
            tw.end = p;
        }
        if (!has_base)
            return std::nullopt;
        return tw;
    }

    std::string base_type(const TypeWords& tw) const
    {
        if (!tw.struct_name.empty())
            return tw.struct_name;
        auto has = [&](std::string_view w) { return std::find(tw.words.begin(), tw.words.end(), w) != tw.words.end(); };
        bool uns = has("unsigned");
        if (has("char"))
            return uns && !java() ? "byte" : "char";
        if (has("float"))
            return "float";
        if (has("double"))
            return "double";
        if (has("bool") || has("_Bool"))
            return java() ? "boolean" : "bool";
        if (has("void"))
            return "void";
        if (has("size_t"))
            return "int";
        std::string t = has("long") ? "long" : has("short") ? "short" : "int";
        if (uns && !java())
            t = t == "long" ? "ulong" : t == "short" ? "ushort" : "uint";
        return t;
    }

    /// Target declaration text for one declarator, or empty when unsupported.
    std::optional<std::pair<std::string, std::string>> render_declarator(const std::string& base, bool is_struct,
                                                                         const Declarator& d, DeclContext ctx) const
    {
        std::string str = java() ? "String" : "string";
        bool local = ctx == DeclContext::Local || ctx == DeclContext::Global;
        if (base == "char" && (d.stars + d.dims.size()) == 1) {
            std::string decl = d.name;
            if (d.init) {
                if (d.init->front() == '{')
                    return std::nullopt;
                decl += " = " + *d.init;
            } else if (local) {
                decl += " = \"\"";
            }
            return std::pair(str, decl);
        }
        if (d.stars > 0) {
            if (!d.dims.empty())
                return std::nullopt;
            if (ctx == DeclContext::Param) {
                if (is_struct && d.stars == 1)
                    return std::pair(base, d.name);
                std::string t = base;
                for (int s = 0; s < d.stars; ++s)
                    t += "[]";
                return std::pair(t, d.name);
            }
            return std::nullopt;
        }
        if (!d.dims.empty()) {
            if (!java() && d.dims.size() > 1)
                return std::nullopt;
            std::string t = base;
            for (std::size_t k = 0; k < d.dims.size(); ++k)
                t += "[]";
            std::string decl = d.name;
            if (d.init) {
                if (d.init->front() != '{')
                    return std::nullopt;
                decl += " = " + *d.init;
            } else if (ctx == DeclContext::Param) {
            } else if (ctx == DeclContext::Field && !java()) {
            } else {
                std::string sizes;
                for (const auto& dim : d.dims) {
                    if (dim.empty())
                        return std::nullopt;
                    sizes += "[" + dim + "]";
                }
                decl += " = new " + base + sizes;
            }
            return std::pair(t, decl);
        }
        std::string decl = d.name;
        if (d.init) {
            if (d.init->front() == '{')
                return std::nullopt;
            decl += " = " + *d.init;
        } else if (is_struct && local) {
            decl += " = new " + base + "()";
        }
        return std::pair(base, decl);
    }

    /// Rewrites a declaration statement; nullopt when the line is no
    /// declaration, empty string when it is one that cannot be converted.
    std::optional<std::string> declaration(const std::string& line, DeclContext ctx) const
    {
        std::string mask = mask_of(line);
        auto tw = type_words(mask);
        if (!tw)
            return std::nullopt;
        std::size_t semi = mask.rfind(';');
        if (semi == std::string::npos || !text::trim(std::string_view(mask).substr(semi + 1)).empty())
            return std::nullopt;
        std::string_view rest = text::trim(std::string_view(mask).substr(tw->end, semi - tw->end));
        if (rest.empty() || (rest.front() != '*' && !text::is_ident_start(rest.front())))
            return std::nullopt;
        // a call or prototype, not a declaration
        std::size_t eq = rest.find('=');
        std::size_t par = rest.find('(');
        if (par != std::string_view::npos && (eq == std::string_view::npos || par < eq))
            return std::optional<std::string>(std::string());

        std::string base = base_type(*tw);
        bool is_struct = !tw->struct_name.empty();
        std::vector<std::pair<std::string, std::string>> parts;
        for (const auto& piece : split_top(line, mask, tw->end, semi)) {
            auto d = parse_declarator(piece);
            if (!d)
                return std::optional<std::string>(std::string());
            auto r = render_declarator(base, is_struct, *d, ctx);
            if (!r)
                return std::optional<std::string>(std::string());
            parts.push_back(*r);
        }
        bool literal_init = std::all_of(parts.begin(), parts.end(), [](const auto& p) {
            std::size_t e = p.second.find(" = ");
            return e != std::string::npos && is_simple_expr(p.second.substr(e + 3)) &&
                   !std::isalpha(static_cast<unsigned char>(p.second[e + 3]));
        });
        std::string prefix;
        if (ctx == DeclContext::Field && !java())
            prefix = "public ";
        else if (ctx == DeclContext::Global)
            prefix = tw->is_const ? (java() ? "static final " : (literal_init ? "const " : "static readonly "))
                                  : "static ";
        else if (ctx == DeclContext::Local && tw->is_const)
            prefix = java() ? "final " : (literal_init ? "const " : "");

        std::string indent = text::indentation_at(line, 0);
        bool same_type = std::all_of(parts.begin(), parts.end(), [&](const auto& p) { return p.first == parts[0].first; });
        std::string out = indent;
        if (same_type) {
            out += prefix + parts[0].first + " ";
            for (std::size_t k = 0; k < parts.size(); ++k)
                out += (k ? ", " : "") + parts[k].second;
            out += ";";
        } else {
            for (std::size_t k = 0; k < parts.size(); ++k)
                out += (k ? " " : "") + prefix + parts[k].first + " " + parts[k].second + ";";
        }
        std::string trailing = line.substr(semi + 1);
        if (!text::trim(trailing).empty())
            out += trailing;
        return out;
    }

    std::optional<std::string> param_list(const std::string& params) const
    {
        std::string_view t = text::trim(params);
        if (t.empty() || t == "void")
            return std::string();
        std::string mask = mask_of(params);
        std::vector<std::string> out;
        for (const auto& p : split_top(params, mask, 0, params.size())) {
            std::string pm = mask_of(p);
            auto tw = type_words(pm);
            if (!tw)
                return std::nullopt;
            auto d = parse_declarator(p.substr(tw->end));
            if (!d || d->init)
                return std::nullopt;
            auto r = render_declarator(base_type(*tw), !tw->struct_name.empty(), *d, DeclContext::Param);
            if (!r)
                return std::nullopt;
            out.push_back(r->first + " " + r->second);
        }
        return text::join(out, ", ");
    }

    void top_level(const std::string& line, const std::string& mask, int line_no, bool& in_main)
    {
        static const std::regex kHeader(R"(^(\s*)([A-Za-z_][\w\s\*]*?)\s*\b([A-Za-z_]\w*)\s*\(([^()]*)\)\s*(\{?)\s*(;?)\s*$)");
        std::smatch m;
        if (std::regex_match(mask, m, kHeader)) {
            std::string name = m[3].str();
            std::string ret_text = m[2].str();
            int stars = count(ret_text, '*');
            ret_text.erase(std::remove(ret_text.begin(), ret_text.end(), '*'), ret_text.end());
            auto tw = type_words(ret_text + " ");
            if (tw && text::trim(std::string_view(ret_text).substr(tw->end)).empty()) {
                if (!m[6].str().empty()) {
                    return;  // prototype
                }
                bool open = !m[5].str().empty();
                std::string header;
                if (name == "main") {
                    header = java() ? "public static void main(String[] args)" : "static void Main(string[] args)";
                    in_main = true;
                } else {
                    std::string params(line.substr(static_cast<std::size_t>(m.position(4)),
                                                   static_cast<std::size_t>(m.length(4))));
                    auto plist = param_list(params);
                    std::string ret = base_type(*tw);
                    if (ret == "char" && stars == 1)
                        ret = java() ? "String" : "string";
                    else if (stars > 0 && tw->struct_name.empty())
                        for (int s = 0; s < stars; ++s)
                            ret += "[]";
                    if (!plist || (stars > 1 && ret.starts_with("char"))) {
                        todo(line, line_no);
                        return;
                    }
                    header = (java() ? "public static " : "static ") + ret + " " + name + "(" + *plist + ")";
                }
                out_.push_back(m[1].str() + header + (open ? " {" : ""));
                return;
            }
        }
        if (auto d = declaration(line, DeclContext::Global)) {
            if (d->empty())
                todo(line, line_no);
            else
                out_.push_back(*d);
            return;
        }
        todo(line, line_no);
    }

    void emit_struct(const StructBlock& s)
    {
        std::string head = java() ? "static class " + s.name : "struct " + s.name;
        bool brace_on_head = masks_[s.start].find('{') != std::string::npos;
        out_.push_back(text::indentation_at(lines_[s.start], 0) + head + (brace_on_head ? " {" : ""));
        for (std::size_t i = s.start + 1; i < s.end; ++i) {
            std::string_view tm = text::trim(masks_[i]);
            if (tm.empty()) {
                out_.push_back(text::trim(lines_[i]).empty() ? std::string() : lines_[i]);
                continue;
            }
            if (tm == "{") {
                out_.push_back(lines_[i]);
                continue;
            }
            auto d = declaration(lines_[i], DeclContext::Field);
            if (d && !d->empty())
                out_.push_back(*d);
            else
                todo(lines_[i], static_cast<int>(i) + 1);
        }
        out_.push_back(text::indentation_at(lines_[s.end], 0) + "}");
    }

    std::string convert_printf(const std::string& line, const std::string& mask, const Call& c, bool& degraded) const
    {
        std::vector<std::string> args = split_top(line, mask, c.open + 1, c.close);
        degraded = false;
        static const std::set<std::string> kAllowed{"d", "f", "s", "c", "u", "ld"};
        std::optional<std::vector<FormatPiece>> pieces;
        bool newline = false;
        if (!args.empty() && args[0].size() >= 2 && args[0].front() == '"' && args[0].back() == '"') {
            std::string body = args[0].substr(1, args[0].size() - 2);
            if (body.ends_with("\\n") && !body.ends_with("\\\\n")) {
                newline = true;
                body.resize(body.size() - 2);
            }
            pieces = parse_format(body, kAllowed);
            std::size_t n_args = 0;
            if (pieces)
                for (const auto& p : *pieces)
                    n_args += p.is_arg ? 1 : 0;
            if (pieces && n_args != args.size() - 1)
                pieces.reset();
        }
        std::string inner = line.substr(c.open + 1, c.close - c.open - 1);
        if (!pieces) {
            degraded = true;
            return java() ? "System.out.printf(" + inner + ")" : "Console.Write(" + inner + ")";
        }
        if (java()) {
            std::vector<std::string> terms;
            std::size_t a = 1;
            for (const auto& p : *pieces)
                terms.push_back(p.is_arg ? paren(args[a++]) : "\"" + p.text + "\"");
            if (terms.size() > 1 && (*pieces)[0].is_arg && (*pieces)[1].is_arg)
                terms.insert(terms.begin(), "\"\"");
            std::string fn = newline ? "System.out.println" : "System.out.print";
            if (terms.empty() && !newline)
                terms.push_back("\"\"");
            return fn + "(" + text::join(terms, " + ") + ")";
        }
        std::string fmt;
        std::vector<std::string> rest;
        std::size_t a = 1;
        for (const auto& p : *pieces) {
            if (p.is_arg) {
                fmt += "{" + std::to_string(rest.size()) + "}";
                rest.push_back(args[a++]);
            } else {
                for (char ch : p.text) {
                    if (ch == '{' || ch == '}')
                        fmt += ch;
                    fmt += ch;
                }
            }
        }
        std::string fn = newline ? "Console.WriteLine" : "Console.Write";
        if (fmt.empty() && rest.empty())
            return fn + (newline ? "()" : "(\"\")");
        if (fmt == "{0}" && rest.size() == 1)
            return fn + "(" + rest[0] + ")";
        std::string call = fn + "(\"" + fmt + "\"";
        for (const auto& r : rest)
            call += ", " + r;
        return call + ")";
    }

    /// One read statement per conversion, or nullopt.
    std::optional<std::vector<std::string>> convert_scanf(const std::string& line, const std::string& mask,
                                                          const Call& c) const
    {
        std::vector<std::string> args = split_top(line, mask, c.open + 1, c.close);
        if (args.empty() || args[0].size() < 2 || args[0].front() != '"')
            return std::nullopt;
        static const std::set<std::string> kAllowed{"d", "i", "u", "ld", "f", "lf", "s", "c"};
        auto pieces = parse_format(args[0].substr(1, args[0].size() - 2), kAllowed);
        if (!pieces)
            return std::nullopt;
        std::vector<std::string> convs;
        for (const auto& p : *pieces)
            if (p.is_arg)
                convs.push_back(p.text);
        if (convs.size() != args.size() - 1)
            return std::nullopt;
        std::vector<std::string> out;
        for (std::size_t k = 0; k < convs.size(); ++k) {
            std::string target = args[k + 1];
            if (!target.empty() && target.front() == '&')
                target = std::string(text::trim(std::string_view(target).substr(1)));
            const std::string& cv = convs[k];
            std::string read;
            if (java()) {
                if (cv == "d" || cv == "i" || cv == "u")
                    read = "scanner.nextInt()";
                else if (cv == "ld")
                    read = "scanner.nextLong()";
                else if (cv == "f")
                    read = "scanner.nextFloat()";
                else if (cv == "lf")
                    read = "scanner.nextDouble()";
                else if (cv == "s")
                    read = "scanner.next()";
                else
                    read = "scanner.next().charAt(0)";
            } else {
                if (cv == "d" || cv == "i")
                    read = "int.Parse(Console.ReadLine())";
                else if (cv == "u")
                    read = "uint.Parse(Console.ReadLine())";
                else if (cv == "ld")
                    read = "long.Parse(Console.ReadLine())";
                else if (cv == "f")
                    read = "float.Parse(Console.ReadLine())";
                else if (cv == "lf")
                    read = "double.Parse(Console.ReadLine())";
                else if (cv == "s")
                    read = "Console.ReadLine()";
                else
                    read = "Console.ReadLine()[0]";
            }
            out.push_back(target + " = " + read + ";");
        }
        return out;
    }

    /// Library calls with direct equivalents. Returns false when nothing changed.
    bool library_calls(std::string& line) const
    {
        struct Map {
            std::string_view c;
            std::string_view java;
            std::string_view cs;
            int kind;  // 0 plain rename, 1 method on first arg, 2 property on first arg
        };
        static const std::vector<Map> kMaps{
            {"strlen", "length", "Length", 1},
            {"strcmp", "compareTo", "string.Compare", 3},
            {"sqrt", "Math.sqrt", "Math.Sqrt", 0},
            {"pow", "Math.pow", "Math.Pow", 0},
            {"fabs", "Math.abs", "Math.Abs", 0},
            {"abs", "Math.abs", "Math.Abs", 0},
            {"atoi", "Integer.parseInt", "int.Parse", 0},
            {"atof", "Double.parseDouble", "double.Parse", 0},
            {"toupper", "Character.toUpperCase", "char.ToUpper", 0},
            {"tolower", "Character.toLowerCase", "char.ToLower", 0},
            {"isdigit", "Character.isDigit", "char.IsDigit", 0},
            {"isalpha", "Character.isLetter", "char.IsLetter", 0},
            {"isspace", "Character.isWhitespace", "char.IsWhiteSpace", 0},
            {"exit", "System.exit", "Environment.Exit", 0},
            {"puts", "System.out.println", "Console.WriteLine", 0},
            {"putchar", "System.out.print", "Console.Write", 0},
        };
        for (const auto& mp : kMaps) {
            std::string mask = mask_of(line);
            auto c = find_call(mask, mp.c);
            if (!c)
                continue;
            std::vector<std::string> args = split_top(line, mask, c->open + 1, c->close);
            std::string rep;
            if (mp.kind == 0) {
                rep = std::string(java() ? mp.java : mp.cs) + line.substr(c->open, c->close - c->open + 1);
            } else if (mp.kind == 1) {
                if (args.size() != 1)
                    return false;
                rep = paren(args[0]) + (java() ? ".length()" : ".Length");
            } else {
                if (args.size() != 2)
                    return false;
                rep = java() ? paren(args[0]) + ".compareTo(" + args[1] + ")"
                             : "string.Compare(" + args[0] + ", " + args[1] + ")";
            }
            line = line.substr(0, c->start) + rep + line.substr(c->close + 1);
            return true;
        }
        return false;
    }

    /// strcpy/strcat used as whole statements.
    bool string_statements(std::string& line) const
    {
        std::string mask = mask_of(line);
        for (std::string_view fn : {"strcpy", "strcat"}) {
            auto c = find_call(mask, fn);
            if (!c)
                continue;
            std::size_t semi = c->close + 1;
            while (semi < mask.size() && mask[semi] == ' ')
                ++semi;
            if (semi >= mask.size() || mask[semi] != ';')
                continue;
            auto args = split_top(line, mask, c->open + 1, c->close);
            if (args.size() != 2)
                continue;
            std::string rep = args[0] + (fn == "strcpy" ? " = " : " += ") + args[1];
            line = line.substr(0, c->start) + rep + line.substr(c->close + 1);
            return true;
        }
        return false;
    }

    static bool unary_residue(const std::string& mask)
    {
        for (std::size_t i = 0; i < mask.size(); ++i) {
            char c = mask[i];
            if (c != '*' && c != '&')
                continue;
            if (c == '&' && ((i + 1 < mask.size() && mask[i + 1] == '&') || (i > 0 && mask[i - 1] == '&')))
                continue;
            if (i + 1 < mask.size() && mask[i + 1] == '=')
                continue;
            std::size_t p = i;
            while (p > 0 && mask[p - 1] == ' ')
                --p;
            char prev = p > 0 ? mask[p - 1] : '\0';
            if (text::is_ident_char(prev) || prev == ')' || prev == ']' || prev == '\'' || prev == '"')
                continue;
            return true;
        }
        return false;
    }

    void body_line(const std::string& original, int line_no, bool in_main)
    {
        std::string line = original;
        if (auto d = declaration(line, DeclContext::Local)) {
            if (d->empty()) {
                todo(original, line_no);
                return;
            }
            line = *d;
        }

        // scanf as a whole statement
        {
            std::string mask = mask_of(line);
            if (auto c = find_call(mask, "scanf")) {
                std::string before(text::trim(std::string_view(mask).substr(0, c->start)));
                std::string after(text::trim(std::string_view(mask).substr(c->close + 1)));
                auto reads = before.empty() && after == ";" ? convert_scanf(line, mask, *c) : std::nullopt;
                if (!reads) {
                    todo(original, line_no);
                    return;
                }
                std::string indent = text::indentation_at(line, 0);
                for (auto& r : *reads) {
                    std::string l = indent + r;
                    finish(l, original, line_no, in_main);
                }
                return;
            }
        }
        std::string trailing_note;
        for (int guard = 0; guard < 16; ++guard) {
            std::string mask = mask_of(line);
            auto c = find_call(mask, "printf");
            if (!c)
                break;
            bool degraded = false;
            std::string rep = convert_printf(line, mask, *c, degraded);
            line = line.substr(0, c->start) + rep + line.substr(c->close + 1);
            if (degraded)
                trailing_note = " " + std::string(kTodoMarker) + " format";
        }
        finish(line, original, line_no, in_main, trailing_note);
    }

    void finish(std::string line, const std::string& original, int line_no, bool in_main,
                const std::string& trailing_note = {})
    {
        for (int guard = 0; guard < 16 && string_statements(line); ++guard) {
        }
        for (int guard = 0; guard < 32 && library_calls(line); ++guard) {
        }
        std::string mask = mask_of(line);
        {
            std::string out;
            std::size_t last = 0;
            for (std::size_t p = mask.find("->"); p != std::string::npos; p = mask.find("->", p + 2)) {
                out.append(line, last, p - last);
                out += '.';
                last = p + 2;
            }
            out.append(line, last, std::string::npos);
            line = out;
        }
        mask = mask_of(line);
        line = replace_words_in_mask(line, mask, "NULL", "null");
        mask = mask_of(line);
        {
            static const std::regex kStructRef(R"(\bstruct\s+(\w+))");
            std::string out;
            std::size_t last = 0;
            for (std::sregex_iterator it(mask.begin(), mask.end(), kStructRef), e; it != e; ++it) {
                auto pos = static_cast<std::size_t>(it->position(0));
                out.append(line, last, pos - last);
                out += (*it)[1].str();
                last = pos + static_cast<std::size_t>(it->length(0));
            }
            out.append(line, last, std::string::npos);
            line = out;
        }
        mask = mask_of(line);
        if (in_main) {
            for (std::size_t p = mask.find("return"); p != std::string::npos; p = mask.find("return", p + 1)) {
                if (!word_at(mask, p, "return"))
                    continue;
                std::size_t semi = mask.find(';', p);
                if (semi == std::string::npos)
                    break;
                line = line.substr(0, p) + "return;" + line.substr(semi + 1);
                mask = mask_of(line);
            }
        }
        bool bad = unary_residue(mask);
        for (const auto& w : kUnconvertible)
            bad = bad || has_word(mask, w);
        if (bad) {
            todo(original, line_no);
            return;
        }
        out_.push_back(line + trailing_note);
    }

    std::string wrap() const
    {
        std::vector<std::string> body;
        for (const auto& l : out_) {
            bool blank = text::trim(l).empty();
            if (blank && (body.empty() || body.back().empty()))
                continue;
            body.push_back(blank ? std::string() : l);
        }
        while (!body.empty() && body.back().empty())
            body.pop_back();

        std::string out;
        if (java()) {
            out += "import java.util.*;\n\n";
            out += "public class " + class_name_ + " {\n";
            out += "    static Scanner scanner = new Scanner(System.in);\n";
            if (!body.empty())
                out += "\n";
        } else {
            out += "using System;\n\n";
            out += "class " + class_name_ + "\n{\n";
        }
        for (const auto& l : body)
            out += l.empty() ? "\n" : "    " + l + "\n";
        out += "}\n";
        return out;
    }

    Target target_;
    std::string class_name_;
    Diagnostics* diag_;
    std::vector<std::string> lines_;
    std::vector<std::string> masks_;
    std::vector<StructBlock> structs_;
    std::set<std::string> struct_names_;
    std::vector<std::string> out_;
};

}  // namespace

const std::vector<RewriteRule>& rules(Target target)
{
    return target == Target::Java ? kJavaRules : kCSharpRules;
}

std::string c_to_java(std::string_view source, const std::string& class_name, Diagnostics* diag)
{
    return Converter(source, class_name, Target::Java, diag).run();
}

std::string c_to_csharp(std::string_view source, const std::string& class_name, Diagnostics* diag)
{
    return Converter(source, class_name, Target::CSharp, diag).run();
}

}  // namespace artgraph::transpile
