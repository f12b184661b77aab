#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "artgraph/frontends.hpp"
#include "artgraph/specgen.hpp"
#include "artgraph/text_util.hpp"
#include "common.hpp"

namespace artgraph::specgen {

namespace {

using namespace detail;
namespace k = kinds;

const std::set<std::string> kNotTypes{
    "return", "new", "else", "if", "while", "for", "foreach", "switch", "using", "lock", "case", "throw",
    "await", "public", "private", "protected", "internal", "static", "virtual", "override", "sealed",
    "abstract", "async", "unsafe", "extern", "class", "struct", "namespace",
};

struct Param {
    std::string name;
    std::string type;
};

struct MethodSig {
    std::string name;
    std::string ret;
    std::vector<Param> params;
    std::size_t header = 0;  ///< offset of the signature line
    std::size_t open = 0;    ///< offset of '{'
};

std::string dafny_type(std::string t)
{
    t = std::string(text::trim(t));
    if (t.ends_with("[]"))
        return "array<" + dafny_type(t.substr(0, t.size() - 2)) + ">";
    if (t.ends_with("[,]"))
        return "array2<" + dafny_type(t.substr(0, t.size() - 3)) + ">";
    static const std::set<std::string> kInts{"int", "long", "short", "byte", "sbyte", "uint", "ulong", "ushort"};
    if (kInts.contains(t))
        return "int";
    if (t == "double" || t == "float" || t == "decimal")
        return "real";
    if (t == "bool" || t == "string" || t == "char")
        return t;
    return t;
}

std::vector<Param> split_params(std::string_view text)
{
    std::vector<Param> out;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::string p(text::trim(text.substr(start, end - start)));
        if (p.empty())
            return;
        for (std::string_view m : {"ref ", "out ", "params ", "this ", "in "})
            if (p.starts_with(m))
                p = std::string(text::trim(std::string_view(p).substr(m.size())));
        std::size_t eq = p.find('=');
        if (eq != std::string::npos)
            p = std::string(text::trim(std::string_view(p).substr(0, eq)));
        std::size_t e = p.size();
        std::size_t b = e;
        while (b > 0 && text::is_ident_char(p[b - 1]))
            --b;
        out.push_back(Param{p.substr(b), std::string(text::trim(std::string_view(p).substr(0, b)))});
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '<' || c == '[')
            ++depth;
        else if (c == '>' || c == ']')
            --depth;
        else if (c == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return out;
}

std::vector<MethodSig> find_methods(std::string_view src, const std::string& blank, Diagnostics* diag)
{
    static const std::regex kSig(
        R"(^[ \t]*((?:(?:public|private|protected|internal|static|virtual|override|sealed|abstract|async|unsafe|new|extern)\s+)*))"
        R"(([A-Za-z_][\w<>,\.]*(?:\s*\[[,\s]*\])*)\s+([A-Za-z_]\w*)\s*\(([^()]*)\))");
    std::vector<MethodSig> out;
    text::LineIndex lines(src);
    std::size_t pos = 0;
    while (pos < blank.size()) {
        std::size_t eol = blank.find('\n', pos);
        std::size_t line_end = eol == std::string::npos ? blank.size() : eol;
        std::string line = blank.substr(pos, line_end - pos);
        std::smatch m;
        if (std::regex_search(line, m, kSig, std::regex_constants::match_continuous)) {
            std::string type = m[2].str();
            std::string name = m[3].str();
            std::size_t after = pos + static_cast<std::size_t>(m.position(0) + m.length(0));
            while (after < blank.size() && std::isspace(static_cast<unsigned char>(blank[after])))
                ++after;
            if (!kNotTypes.contains(type) && !kNotTypes.contains(name) && after < blank.size() &&
                blank[after] == '{') {
                MethodSig sig;
                sig.name = name;
                sig.ret = type;
                std::size_t params_at = pos + static_cast<std::size_t>(m.position(4));
                sig.params = split_params(src.substr(params_at, static_cast<std::size_t>(m.length(4))));
                sig.header = pos;
                sig.open = after;
                try {
                    std::size_t close = frontend::find_matching_brace(src, after);
                    if (close == std::string_view::npos)
                        throw frontend::ParseError("no matching '}' for '{'", lines.line_of(after));
                    out.push_back(std::move(sig));
                    std::size_t next = blank.find('\n', close);
                    pos = next == std::string::npos ? blank.size() : next + 1;
                    continue;
                } catch (const frontend::ParseError& e) {
                    if (diag)
                        diag->warn("dafny-skip", "method '" + name + "': " + e.what(), e.line());
                }
            }
        }
        pos = line_end + 1;
    }
    return out;
}

class MethodEmitter {
public:
    MethodEmitter(const MethodSig& sig, const std::set<std::string>& void_methods,
                  const std::set<std::string>& value_methods)
        : sig_(sig), void_methods_(void_methods), value_methods_(value_methods)
    {}

    std::string emit(std::string_view src, Diagnostics* diag)
    {
        frontend::BodyExtent body = frontend::extract_method_bodies(src, sig_.open);
        wrap_ = "class G { void M() {" + body.body + "} }";
        SyntaxTree tree = frontend::parse_csharp(wrap_, nullptr);
        const SyntaxTree* block = nullptr;
        tree.walk([&](const SyntaxTree& n, int) {
            if (!block && n.kind == k::kMethodDecl && !n.children.empty() &&
                n.children.back().kind == k::kCompoundStmt)
                block = &n.children.back();
        });
        if (!block) {
            if (diag)
                diag->warn("dafny-skip", "method '" + sig_.name + "': body not parsed");
            return {};
        }

        is_void_ = sig_.ret == "void";
        std::set<std::string> taken;
        for (const auto& p : sig_.params)
            taken.insert(p.name);
        block->walk([&](const SyntaxTree& n, int) {
            if (n.kind == k::kVarDecl || n.kind == k::kDeclRefExpr)
                taken.insert(n.label);
        });
        for (std::string cand : {"r", "result", "r0", "r1", "r2"}) {
            if (!taken.contains(cand)) {
                ret_ = cand;
                break;
            }
        }
        for (const auto& p : sig_.params)
            param_types_[p.name] = p.type;

        std::vector<std::string> spec;
        if (!is_void_) {
            const auto& stmts = block->children;
            bool returned = false;
            for (std::size_t i = 0; i < stmts.size() && !returned; ++i) {
                const SyntaxTree& st = stmts[i];
                const SyntaxTree* other = nullptr;
                if (st.kind == k::kIfStmt && st.children.size() == 3)
                    other = &st.children[2];
                else if (st.kind == k::kIfStmt && st.children.size() == 2 && i + 1 < stmts.size() &&
                         stmts[i + 1].kind == k::kReturnStmt)
                    other = &stmts[i + 1];
                st.walk([&](const SyntaxTree& n, int) { returned = returned || n.kind == k::kReturnStmt; });
                if (!other)
                    continue;
                const SyntaxTree* e1 = trailing_return(st.children[1]);
                const SyntaxTree* e2 = trailing_return(*other);
                if (!e1 || !e2)
                    continue;
                std::string c = expr_or_text(st.children[0]);
                add_spec(spec, "ensures (" + c + ") ==> " + ret_ + " == " + expr_or_text(*e1));
                add_spec(spec, "ensures !(" + c + ") ==> " + ret_ + " == " + expr_or_text(*e2));
            }
        }
        std::vector<std::string> modifies;
        block->walk([&](const SyntaxTree& n, int) {
            const SyntaxTree* t = written_target(n);
            if (!t || t->kind != k::kArraySubscriptExpr)
                return;
            std::string root = root_name(*t);
            auto it = param_types_.find(root);
            if (it != param_types_.end() && it->second.ends_with("]") &&
                std::find(modifies.begin(), modifies.end(), root) == modifies.end())
                modifies.push_back(root);
        });
        for (const auto& m : modifies)
            add_spec(spec, "modifies " + m);

        std::vector<std::string> body_lines;
        emit_block(block->children, 1, body_lines);

        std::string out = "method " + sig_.name + "(";
        bool is_main = sig_.name == "Main";
        if (!is_main) {
            for (std::size_t i = 0; i < sig_.params.size(); ++i) {
                if (i)
                    out += ", ";
                out += sig_.params[i].name + ": " + dafny_type(sig_.params[i].type);
            }
        }
        out += ")";
        if (!is_void_)
            out += " returns (" + ret_ + ": " + dafny_type(sig_.ret) + ")";
        out += "\n";
        for (const auto& s : spec)
            out += "  " + s + "\n";
        out += "{\n";
        for (const auto& l : body_lines)
            out += l + "\n";
        out += "}\n";
        for (const auto& d : dropped_)
            out += "// unsupported: " + d + "\n";
        return out;
    }

private:
    static void add_spec(std::vector<std::string>& spec, std::string s)
    {
        if (std::find(spec.begin(), spec.end(), s) == spec.end())
            spec.push_back(std::move(s));
    }

    std::string text_of(const SyntaxTree& n) const { return slice(wrap_, n); }

    void drop(const SyntaxTree& n) { dropped_.push_back(text_of(n)); }

    std::string expr_or_text(const SyntaxTree& e) const
    {
        if (auto s = expr(e, true))
            return *s;
        return text_of(e);
    }

    std::optional<std::string> sub(const SyntaxTree& e) const
    {
        auto s = expr(e, false);
        if (!s)
            return std::nullopt;
        bool compound = e.kind == k::kBinaryOperator || e.kind == k::kConditionalOperator ||
                        e.kind == k::kCastExpr;
        return compound ? "(" + *s + ")" : *s;
    }

    std::optional<std::string> args_of(const SyntaxTree& call, std::size_t first) const
    {
        std::string out;
        for (std::size_t i = first; i < call.children.size(); ++i) {
            auto a = expr(call.children[i], true);
            if (!a)
                return std::nullopt;
            out += (i > first ? ", " : "") + *a;
        }
        return out;
    }

    std::optional<std::string> expr(const SyntaxTree& e, bool top) const
    {
        (void)top;
        const std::string& l = e.label;
        if (e.kind == k::kIntegerLiteral) {
            std::string v = l;
            while (!v.empty() && std::isalpha(static_cast<unsigned char>(v.back())) &&
                   !(v.size() > 2 && (v[1] == 'x' || v[1] == 'X') && std::isxdigit(static_cast<unsigned char>(v.back()))))
                v.pop_back();
            return v;
        }
        if (e.kind == k::kFloatingLiteral) {
            std::string v = l;
            while (!v.empty() && (v.back() == 'f' || v.back() == 'F' || v.back() == 'd' || v.back() == 'D' ||
                                  v.back() == 'm' || v.back() == 'M'))
                v.pop_back();
            if (v.find_first_of("eE") != std::string::npos)
                return std::nullopt;
            if (v.find('.') == std::string::npos)
                v += ".0";
            if (v.front() == '.')
                v = "0" + v;
            if (v.back() == '.')
                v += "0";
            return v;
        }
        if (e.kind == k::kStringLiteral) {
            if (l.empty() || l.front() != '"')
                return std::nullopt;
            return l;
        }
        if (e.kind == k::kCharacterLiteral || e.kind == k::kBoolLiteral)
            return l;
        if (e.kind == k::kNullLiteral)
            return std::string("null");
        if (e.kind == k::kDeclRefExpr) {
            if (!text::is_identifier(l) || l == "int" || l == "string" || l == "Console" || l == "Math")
                return std::nullopt;
            return l;
        }
        if (e.kind == k::kBinaryOperator && e.children.size() == 2) {
            static const std::set<std::string> kOps{"+", "-", "*", "/", "%", "<", ">", "<=", ">=", "==", "!=",
                                                     "&&", "||"};
            if (!kOps.contains(l))
                return std::nullopt;
            auto a = sub(e.children[0]);
            auto b = sub(e.children[1]);
            if (!a || !b)
                return std::nullopt;
            return *a + " " + l + " " + *b;
        }
        if (e.kind == k::kUnaryOperator && e.children.size() == 1 && e.type != "postfix") {
            if (l != "-" && l != "!" && l != "+")
                return std::nullopt;
            auto a = sub(e.children[0]);
            if (!a)
                return std::nullopt;
            return l == "+" ? *a : l + *a;
        }
        if (e.kind == k::kConditionalOperator && e.children.size() == 3) {
            auto c = expr(e.children[0], true);
            auto a = expr(e.children[1], true);
            auto b = expr(e.children[2], true);
            if (!c || !a || !b)
                return std::nullopt;
            return "if " + *c + " then " + *a + " else " + *b;
        }
        if (e.kind == k::kArraySubscriptExpr && e.children.size() == 2) {
            auto a = sub(e.children[0]);
            auto i = expr(e.children[1], true);
            if (!a || !i)
                return std::nullopt;
            return *a + "[" + *i + "]";
        }
        if (e.kind == k::kMemberRefExpr && e.children.size() == 1 && l == "Length") {
            auto a = sub(e.children[0]);
            if (!a)
                return std::nullopt;
            return *a + ".Length";
        }
        if (e.kind == k::kCastExpr && e.children.size() == 1) {
            auto a = sub(e.children[0]);
            if (!a)
                return std::nullopt;
            std::string t = dafny_type(l);
            if (t != "int" && t != "real")
                return std::nullopt;
            return *a + " as " + t;
        }
        if (e.kind == k::kCallExpr && !e.children.empty() && e.children[0].kind == k::kDeclRefExpr &&
            e.children[0].label == "Math") {
            if ((l == "Max" || l == "Min") && e.children.size() == 3) {
                auto a = expr(e.children[1], true);
                auto b = expr(e.children[2], true);
                if (!a || !b)
                    return std::nullopt;
                return "if " + *a + (l == "Max" ? " > " : " < ") + *b + " then " + *a + " else " + *b;
            }
            if (l == "Abs" && e.children.size() == 2) {
                auto a = sub(e.children[1]);
                if (!a)
                    return std::nullopt;
                return "if " + *a + " < 0 then -" + *a + " else " + *a;
            }
        }
        return std::nullopt;
    }

    /// `M(args)` for a call to a method of this file, as a statement right-hand side.
    std::optional<std::string> method_call(const SyntaxTree& e, bool need_value) const
    {
        if (e.kind != k::kCallExpr)
            return std::nullopt;
        const auto& methods = need_value ? value_methods_ : void_methods_;
        if (!methods.contains(e.label))
            return std::nullopt;
        auto args = args_of(e, 0);
        if (!args)
            return std::nullopt;
        return e.label + "(" + *args + ")";
    }

    std::optional<std::string> lvalue(const SyntaxTree& e) const
    {
        if (e.kind == k::kDeclRefExpr || e.kind == k::kArraySubscriptExpr)
            return expr(e, true);
        return std::nullopt;
    }

    static std::string pad(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

    void emit_block(const std::vector<SyntaxTree>& stmts, int depth, std::vector<std::string>& out)
    {
        for (std::size_t i = 0; i < stmts.size(); ++i)
            emit_stmt(stmts[i], &stmts, i, depth, out);
    }

    void emit_body(const SyntaxTree& st, int depth, std::vector<std::string>& out)
    {
        if (st.kind == k::kCompoundStmt)
            emit_block(st.children, depth, out);
        else
            emit_stmt(st, nullptr, 0, depth, out);
    }

    std::optional<std::string> print_items(const SyntaxTree& call) const
    {
        std::vector<std::string> items;
        if (call.children.size() >= 2 && call.children[1].kind == k::kStringLiteral && call.children.size() > 2) {
            // composite format: "x={0}, y={1}"
            std::string fmt = call.children[1].label;
            if (fmt.size() < 2 || fmt.front() != '"')
                return std::nullopt;
            std::string body = fmt.substr(1, fmt.size() - 2);
            std::string lit;
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (body[i] == '{') {
                    std::size_t close = body.find('}', i);
                    if (close == std::string::npos)
                        return std::nullopt;
                    std::string spec = body.substr(i + 1, close - i - 1);
                    std::size_t colon = spec.find(':');
                    std::string idx = spec.substr(0, colon);
                    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), ::isdigit))
                        return std::nullopt;
                    std::size_t arg = std::stoul(idx) + 2;
                    if (arg >= call.children.size())
                        return std::nullopt;
                    auto a = expr(call.children[arg], true);
                    if (!a)
                        return std::nullopt;
                    if (!lit.empty())
                        items.push_back("\"" + lit + "\"");
                    lit.clear();
                    items.push_back(*a);
                    i = close;
                } else {
                    lit += body[i];
                }
            }
            if (!lit.empty())
                items.push_back("\"" + lit + "\"");
            return text::join(items, ", ");
        }
        for (std::size_t i = 1; i < call.children.size(); ++i) {
            auto a = expr(call.children[i], true);
            if (!a)
                return std::nullopt;
            items.push_back(*a);
        }
        return text::join(items, ", ");
    }

    void emit_loop_header(const SyntaxTree& loop, const std::vector<SyntaxTree>* siblings, std::size_t index,
                          const std::string& cond, int depth, std::vector<std::string>& out)
    {
        out.push_back(pad(depth) + "while " + cond);
        auto shape = analyze_loop(wrap_, loop, siblings, index);
        if (shape && shape->step != 0) {
            if (std::all_of(shape->bound.begin(), shape->bound.end(),
                            [](char c) { return text::is_ident_char(c) || c == '.'; }))
                shape->bound_simple = true;
            if (auto v = shape->variant()) {
                std::string b = shape->bound_simple ? shape->bound : "(" + shape->bound + ")";
                std::string inv;
                if (shape->op == "<")
                    inv = shape->var + " <= " + b;
                else if (shape->op == "<=")
                    inv = shape->var + " <= " + b + " + 1";
                else if (shape->op == ">")
                    inv = shape->var + " >= " + b;
                else
                    inv = shape->var + " >= " + b + " - 1";
                out.push_back(pad(depth + 1) + "invariant " + inv);
                out.push_back(pad(depth + 1) + "decreases " + *v);
            }
        }
    }

    void emit_stmt(const SyntaxTree& st, const std::vector<SyntaxTree>* siblings, std::size_t index, int depth,
                   std::vector<std::string>& out)
    {
        const std::string p = pad(depth);
        if (st.kind == k::kNullStmt)
            return;
        if (st.kind == k::kCompoundStmt) {
            emit_block(st.children, depth, out);
            return;
        }
        if (st.kind == k::kDeclStmt) {
            for (const auto& v : st.children) {
                if (v.kind != k::kVarDecl)
                    continue;
                std::string type = dafny_type(v.type);
                bool is_var = v.type == "var";
                const SyntaxTree* init =
                    (!v.children.empty() && v.children.back().kind != k::kTypeRef) ? &v.children.back() : nullptr;
                if (!init) {
                    if (is_var)
                        drop(st);
                    else
                        out.push_back(p + "var " + v.label + ": " + type + ";");
                    continue;
                }
                if (auto call = method_call(*init, true)) {
                    out.push_back(p + "var " + v.label + " := " + *call + ";");
                    continue;
                }
                if (init->kind == k::kInitListExpr && type.starts_with("array<")) {
                    std::vector<std::string> items;
                    bool ok = true;
                    for (const auto& item : init->children) {
                        auto s = expr(item, true);
                        ok = ok && s.has_value();
                        if (s)
                            items.push_back(*s);
                    }
                    if (ok) {
                        std::string elem = type.substr(6, type.size() - 7);
                        out.push_back(p + "var " + v.label + " := new " + elem + "[" + std::to_string(items.size()) +
                                      "] [" + text::join(items, ", ") + "];");
                        continue;
                    }
                }
                if (init->kind == k::kNewExpr && init->label.ends_with("[]") && init->children.size() == 1) {
                    auto n = expr(init->children[0], true);
                    if (n) {
                        std::string elem = dafny_type(init->label.substr(0, init->label.size() - 2));
                        out.push_back(p + "var " + v.label + " := new " + elem + "[" + *n + "];");
                        continue;
                    }
                }
                if (auto e = expr(*init, true)) {
                    if (is_var)
                        out.push_back(p + "var " + v.label + " := " + *e + ";");
                    else
                        out.push_back(p + "var " + v.label + ": " + type + " := " + *e + ";");
                    continue;
                }
                if (!is_var)
                    out.push_back(p + "var " + v.label + ": " + type + ";");
                dropped_.push_back(v.label + " = " + text_of(*init));
            }
            return;
        }
        if (st.kind == k::kBinaryOperator && st.children.size() == 2 && is_assign_op(st.label)) {
            auto lhs = lvalue(st.children[0]);
            if (lhs) {
                if (st.label == "=") {
                    if (auto call = method_call(st.children[1], true)) {
                        out.push_back(p + *lhs + " := " + *call + ";");
                        return;
                    }
                    if (auto rhs = expr(st.children[1], true)) {
                        out.push_back(p + *lhs + " := " + *rhs + ";");
                        return;
                    }
                } else {
                    std::string op = st.label.substr(0, st.label.size() - 1);
                    if (op == "+" || op == "-" || op == "*" || op == "/" || op == "%") {
                        if (auto rhs = sub(st.children[1])) {
                            out.push_back(p + *lhs + " := " + *lhs + " " + op + " " + *rhs + ";");
                            return;
                        }
                    }
                }
            }
            drop(st);
            return;
        }
        if (st.kind == k::kUnaryOperator && (st.label == "++" || st.label == "--") && st.children.size() == 1) {
            if (auto lhs = lvalue(st.children[0])) {
                out.push_back(p + *lhs + " := " + *lhs + (st.label == "++" ? " + 1;" : " - 1;"));
                return;
            }
            drop(st);
            return;
        }
        if (st.kind == k::kCallExpr) {
            if (!st.children.empty() && st.children[0].kind == k::kDeclRefExpr && st.children[0].label == "Console" &&
                (st.label == "WriteLine" || st.label == "Write")) {
                if (auto items = print_items(st)) {
                    std::string line = *items;
                    if (st.label == "WriteLine")
                        line += line.empty() ? "\"\\n\"" : ", \"\\n\"";
                    if (!line.empty()) {
                        out.push_back(p + "print " + line + ";");
                        return;
                    }
                    return;
                }
            }
            if (auto call = method_call(st, false)) {
                out.push_back(p + *call + ";");
                return;
            }
            drop(st);
            return;
        }
        if (st.kind == k::kIfStmt && st.children.size() >= 2) {
            emit_if(st, depth, out, false);
            return;
        }
        if (st.kind == k::kWhileStmt && st.children.size() == 2) {
            auto cond = expr(st.children[0], true);
            if (!cond) {
                drop(st);
                return;
            }
            emit_loop_header(st, siblings, index, *cond, depth, out);
            out.push_back(p + "{");
            emit_body(st.children[1], depth + 1, out);
            out.push_back(p + "}");
            return;
        }
        if (st.kind == k::kDoStmt && st.children.size() == 2) {
            auto cond = expr(st.children[1], true);
            if (!cond) {
                drop(st);
                return;
            }
            emit_body(st.children[0], depth, out);
            emit_loop_header(st, siblings, index, *cond, depth, out);
            out.push_back(p + "{");
            emit_body(st.children[0], depth + 1, out);
            out.push_back(p + "}");
            return;
        }
        if (st.kind == k::kForStmt && st.children.size() == 4) {
            std::optional<std::string> cond =
                st.children[1].kind == k::kNullStmt ? std::optional<std::string>("true") : expr(st.children[1], true);
            if (!cond) {
                drop(st);
                return;
            }
            bool scoped = st.children[0].kind == k::kDeclStmt;
            int d = depth;
            if (scoped) {
                out.push_back(p + "{");
                ++d;
            }
            emit_stmt(st.children[0], nullptr, 0, d, out);
            emit_loop_header(st, nullptr, 0, *cond, d, out);
            out.push_back(pad(d) + "{");
            emit_body(st.children[3], d + 1, out);
            emit_stmt(st.children[2], nullptr, 0, d + 1, out);
            out.push_back(pad(d) + "}");
            if (scoped)
                out.push_back(p + "}");
            return;
        }
        if (st.kind == k::kReturnStmt) {
            if (st.children.empty() || is_void_) {
                out.push_back(p + "return;");
                return;
            }
            const SyntaxTree& e = st.children.front();
            std::optional<std::string> rhs = method_call(e, true);
            if (!rhs)
                rhs = expr(e, true);
            if (!rhs) {
                drop(st);
                return;
            }
            out.push_back(p + ret_ + " := " + *rhs + ";");
            out.push_back(p + "return;");
            return;
        }
        if (st.kind == k::kBreakStmt) {
            out.push_back(p + "break;");
            return;
        }
        if (st.kind == k::kContinueStmt) {
            out.push_back(p + "continue;");
            return;
        }
        if (st.kind == k::kSwitchStmt && st.children.size() == 2) {
            emit_switch(st, depth, out);
            return;
        }
        drop(st);
    }

    void emit_if(const SyntaxTree& st, int depth, std::vector<std::string>& out, bool chained)
    {
        const std::string p = pad(depth);
        auto cond = expr(st.children[0], true);
        if (!cond) {
            drop(st);
            return;
        }
        if (chained)
            out.back() += " if " + *cond + " {";
        else
            out.push_back(p + "if " + *cond + " {");
        emit_body(st.children[1], depth + 1, out);
        if (st.children.size() == 3) {
            const SyntaxTree& e = st.children[2];
            if (e.kind == k::kIfStmt && expr(e.children[0], true)) {
                out.push_back(p + "} else");
                emit_if(e, depth, out, true);
                return;
            }
            out.push_back(p + "} else {");
            emit_body(e, depth + 1, out);
        }
        out.push_back(p + "}");
    }

    void emit_switch(const SyntaxTree& st, int depth, std::vector<std::string>& out)
    {
        const std::string p = pad(depth);
        auto s = expr(st.children[0], true);
        if (!s) {
            drop(st);
            return;
        }
        std::vector<std::string> pending;
        bool first = true;
        bool has_default = false;
        const SyntaxTree* default_group = nullptr;
        for (const auto& g : st.children[1].children) {
            bool is_case = g.kind == k::kCaseStmt;
            if (!is_case && g.kind != k::kDefaultStmt)
                continue;
            std::size_t begin = is_case ? 1 : 0;
            if (is_case) {
                auto v = expr(g.children[0], true);
                if (!v) {
                    drop(st);
                    return;
                }
                pending.push_back(*s + " == " + *v);
            } else {
                has_default = true;
                default_group = &g;
                continue;
            }
            if (g.children.size() <= begin)
                continue;
            out.push_back(p + (first ? "if " : "} else if ") + text::join(pending, " || ") + " {");
            first = false;
            pending.clear();
            for (std::size_t i = begin; i < g.children.size(); ++i) {
                if (i + 1 == g.children.size() && g.children[i].kind == k::kBreakStmt)
                    break;
                emit_stmt(g.children[i], &g.children, i, depth + 1, out);
            }
        }
        if (has_default && default_group) {
            if (first) {
                emit_block(default_group->children, depth, out);
                return;
            }
            out.push_back(p + "} else {");
            for (std::size_t i = 0; i < default_group->children.size(); ++i) {
                if (i + 1 == default_group->children.size() && default_group->children[i].kind == k::kBreakStmt)
                    break;
                emit_stmt(default_group->children[i], &default_group->children, i, depth + 1, out);
            }
        }
        if (!first)
            out.push_back(p + "}");
    }

    const MethodSig& sig_;
    const std::set<std::string>& void_methods_;
    const std::set<std::string>& value_methods_;
    std::string wrap_;
    std::string ret_ = "r";
    bool is_void_ = false;
    std::map<std::string, std::string> param_types_;
    std::vector<std::string> dropped_;
};

}  // namespace

std::string gen_dafny(std::string_view source, Diagnostics* diag)
{
    std::string blank = frontend::blank_comments_and_literals(source);
    std::vector<MethodSig> methods = find_methods(source, blank, diag);
    std::set<std::string> void_methods;
    std::set<std::string> value_methods;
    for (const auto& m : methods)
        (m.ret == "void" ? void_methods : value_methods).insert(m.name);

    std::string out;
    for (const auto& m : methods) {
        try {
            MethodEmitter emitter(m, void_methods, value_methods);
            std::string text = emitter.emit(source, diag);
            if (text.empty())
                continue;
            if (!out.empty())
                out += "\n";
            out += text;
        } catch (const frontend::ParseError& e) {
            if (diag)
                diag->warn("dafny-skip", "method '" + m.name + "': " + e.what(), e.line());
        }
    }
    return out;
}

}  // namespace artgraph::specgen
