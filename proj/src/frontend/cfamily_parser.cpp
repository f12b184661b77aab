#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/frontends.hpp"
#include "artgraph/text_util.hpp"
#include "lexer.hpp"

namespace artgraph::frontend {

namespace {

using detail::Token;
using detail::TokKind;
namespace k = kinds;

// Thrown inside the parser when input leaves the supported subset; caught at
// statement or member level and turned into an UNKNOWN_STMT leaf.
struct Unsupported {
    std::size_t token;
};

const std::set<std::string_view> kCBuiltinTypes{
    "void", "char", "short", "int", "long", "float", "double", "signed", "unsigned", "_Bool", "bool",
};
const std::set<std::string_view> kCQualifiers{
    "const", "volatile", "static", "extern", "register", "inline", "auto", "restrict", "__inline",
};
const std::set<std::string_view> kJavaPrimitives{
    "byte", "short", "int", "long", "float", "double", "boolean", "char", "void",
};
const std::set<std::string_view> kJavaModifiers{
    "public", "private", "protected", "static", "final", "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "default",
};
const std::set<std::string_view> kCSharpPrimitives{
    "int", "uint", "long", "ulong", "short", "ushort", "byte", "sbyte", "float", "double",
    "decimal", "bool", "char", "string", "object", "void",
};
const std::set<std::string_view> kCSharpModifiers{
    "public", "private", "protected", "internal", "static", "readonly", "const", "sealed",
    "abstract", "virtual", "override", "unsafe", "extern", "async", "partial", "volatile",
};
const std::set<std::string_view> kReservedStatementWords{
    "if", "else", "while", "for", "do", "switch", "case", "default", "return", "break",
    "continue", "goto", "sizeof", "new", "try", "catch", "finally", "throw", "foreach",
    "using", "lock", "yield", "instanceof", "typedef", "struct", "union", "enum", "class",
};

class Parser {
public:
    Parser(std::string_view src, Language lang, Diagnostics* diag)
        : src_(src), lang_(lang), diag_(diag), toks_(detail::tokenize(src, lang))
    {
        check_brace_balance();
    }

    SyntaxTree parse_c_file()
    {
        SyntaxTree root = file_root();
        while (!at_end()) {
            std::size_t start = i_;
            try {
                parse_c_external(root);
            } catch (const Unsupported&) {
                root.add(recover(start));
            }
        }
        return root;
    }

    SyntaxTree parse_oo_file()
    {
        SyntaxTree root = file_root();
        parse_oo_members(root, /*class_name=*/"", /*top=*/true);
        return root;
    }

private:
    // ---------------------------------------------------------------- tokens

    const Token& peek(std::size_t ahead = 0) const
    {
        return toks_[std::min(i_ + ahead, toks_.size() - 1)];
    }
    bool at_end() const { return peek().kind == TokKind::End; }
    bool check(std::string_view s, std::size_t ahead = 0) const
    {
        const auto& t = peek(ahead);
        return (t.kind == TokKind::Punct || t.kind == TokKind::Ident) && t.text == s;
    }
    bool accept(std::string_view s)
    {
        if (!check(s))
            return false;
        ++i_;
        return true;
    }
    void expect(std::string_view s)
    {
        if (!accept(s))
            throw Unsupported{i_};
    }
    const Token& take()
    {
        const Token& t = peek();
        if (t.kind != TokKind::End)
            ++i_;
        return t;
    }
    const Token& prev() const { return toks_[i_ == 0 ? 0 : i_ - 1]; }

    bool is_ident(std::size_t ahead = 0) const { return peek(ahead).kind == TokKind::Ident; }

    SyntaxTree node(std::string_view kind, std::string label, const Token& at) const
    {
        SyntaxTree n(std::string(kind), std::move(label), Span{at.line, at.col});
        n.begin = at.begin;
        n.end = at.end;
        return n;
    }
    void finish(SyntaxTree& n) const { n.end = std::max(n.begin, prev().end); }

    std::string slice(std::size_t b, std::size_t e) const
    {
        if (e <= b)
            return {};
        return text::normalize_ws(src_.substr(b, e - b));
    }

    SyntaxTree file_root() const
    {
        SyntaxTree root(std::string(k::kFile), "", Span{1, 1});
        root.begin = 0;
        root.end = src_.size();
        return root;
    }

    void check_brace_balance() const
    {
        std::vector<const Token*> open;
        for (const auto& t : toks_) {
            if (t.kind != TokKind::Punct)
                continue;
            if (t.text == "{") {
                open.push_back(&t);
            } else if (t.text == "}") {
                if (open.empty())
                    throw ParseError("unmatched '}'", t.line);
                open.pop_back();
            }
        }
        if (!open.empty())
            throw ParseError("unclosed '{'", open.back()->line);
    }

    SyntaxTree recover(std::size_t start)
    {
        i_ = start;
        const Token first = peek();
        int depth = 0;
        while (!at_end()) {
            const Token& t = peek();
            if (t.kind == TokKind::Punct && (t.text == "(" || t.text == "[" || t.text == "{")) {
                ++depth;
            } else if (t.kind == TokKind::Punct && (t.text == ")" || t.text == "]")) {
                depth = std::max(0, depth - 1);
            } else if (t.kind == TokKind::Punct && t.text == "}") {
                if (depth == 0)
                    break;
                --depth;
                ++i_;
                if (depth == 0 && !check("catch") && !check("finally") && !check("else") &&
                    !check("while")) {
                    accept(";");
                    break;
                }
                continue;
            } else if (t.kind == TokKind::Punct && t.text == ";" && depth == 0) {
                ++i_;
                break;
            }
            ++i_;
        }
        if (i_ == start)
            ++i_;
        SyntaxTree n = node(k::kUnknownStmt, slice(first.begin, prev().end), first);
        finish(n);
        if (diag_)
            diag_->warn("unknown-construct", "unsupported construct: " + n.label.substr(0, 60), first.line);
        return n;
    }

    // ---------------------------------------------------------- C top level

    void parse_c_external(SyntaxTree& root)
    {
        if (accept(";"))
            return;
        if (check("typedef")) {
            parse_typedef(root);
            return;
        }
        if ((check("struct") || check("union")) && (check("{", 1) || (is_ident(1) && check("{", 2)))) {
            const Token& start = peek();
            SyntaxTree decl = parse_struct_body();
            std::string tag = decl.label;
            // `struct P {...} p, q;`
            if (!check(";")) {
                TypeSpec spec{"struct " + tag, "struct " + tag, start.begin};
                root.add(std::move(decl));
                parse_c_var_declarators(root, spec, start, /*file_level=*/true);
                return;
            }
            expect(";");
            root.add(std::move(decl));
            return;
        }
        if (check("enum") && (check("{", 1) || (is_ident(1) && check("{", 2)))) {
            root.add(parse_enum_body());
            accept(";");
            return;
        }

        const Token& start = peek();
        auto spec = parse_c_type_spec();
        if (!spec)
            throw Unsupported{i_};
        Declarator d = parse_declarator(/*allow_abstract=*/false);
        if (d.is_function) {
            SyntaxTree fn = node(k::kFunctionDecl, d.name, start);
            fn.type = spec->text + d.pointer;
            if (!spec->user_type.empty())
                fn.add(type_ref(spec->user_type, start));
            for (auto& p : d.params)
                fn.add(std::move(p));
            if (check("{")) {
                fn.add(parse_compound());
            } else {
                expect(";");
            }
            finish(fn);
            root.add(std::move(fn));
            return;
        }
        parse_c_var_declarators(root, *spec, start, /*file_level=*/true, std::move(d));
    }

    void parse_typedef(SyntaxTree& root)
    {
        const Token& start = take();  // typedef
        if ((check("struct") || check("union")) && (check("{", 1) || (is_ident(1) && check("{", 2)))) {
            SyntaxTree decl = parse_struct_body();
            if (!is_ident())
                throw Unsupported{i_};
            const Token& alias = take();
            typedefs_.insert(alias.text);
            if (decl.label.empty())
                decl.label = alias.text;
            while (accept(",")) {
                while (accept("*")) {}
                if (is_ident())
                    typedefs_.insert(take().text);
            }
            expect(";");
            finish(decl);
            root.add(std::move(decl));
            return;
        }
        if (check("enum") && (check("{", 1) || (is_ident(1) && check("{", 2)))) {
            SyntaxTree decl = parse_enum_body();
            if (!is_ident())
                throw Unsupported{i_};
            const Token& alias = take();
            typedefs_.insert(alias.text);
            if (decl.label.empty())
                decl.label = alias.text;
            expect(";");
            root.add(std::move(decl));
            return;
        }
        auto spec = parse_c_type_spec();
        if (!spec)
            throw Unsupported{i_};
        Declarator d = parse_declarator(false);
        if (d.name.empty())
            throw Unsupported{i_};
        typedefs_.insert(d.name);
        SyntaxTree td = node(k::kTypedefDecl, d.name, start);
        td.type = spec->text + d.pointer;
        if (!spec->user_type.empty())
            td.add(type_ref(spec->user_type, start));
        expect(";");
        finish(td);
        root.add(std::move(td));
    }

    SyntaxTree parse_struct_body()
    {
        const Token& kw = take();  // struct / union
        std::string tag;
        if (is_ident())
            tag = take().text;
        SyntaxTree decl = node(k::kStructDecl, tag, kw);
        expect("{");
        while (!check("}") && !at_end()) {
            std::size_t start_tok = i_;
            try {
                const Token& fstart = peek();
                auto spec = parse_c_type_spec();
                if (!spec)
                    throw Unsupported{i_};
                do {
                    Declarator d = parse_declarator(false);
                    if (d.is_function || d.name.empty())
                        throw Unsupported{i_};
                    SyntaxTree field = node(k::kFieldDecl, d.name, *d.name_tok);
                    field.begin = fstart.begin;
                    field.type = spec->text + d.pointer + d.suffix;
                    if (!spec->user_type.empty())
                        field.add(type_ref(spec->user_type, *d.name_tok));
                    for (auto& dim : d.dims)
                        field.add(std::move(dim));
                    finish(field);
                    decl.add(std::move(field));
                } while (accept(","));
                expect(";");
            } catch (const Unsupported&) {
                decl.add(recover(start_tok));
            }
        }
        expect("}");
        finish(decl);
        return decl;
    }

    SyntaxTree parse_enum_body()
    {
        const Token& kw = take();  // enum
        std::string tag;
        if (is_ident())
            tag = take().text;
        SyntaxTree decl = node(k::kEnumDecl, tag, kw);
        expect("{");
        while (!check("}") && !at_end()) {
            if (!is_ident())
                throw Unsupported{i_};
            const Token& name = take();
            SyntaxTree c = node(k::kEnumConstantDecl, name.text, name);
            if (accept("="))
                c.add(parse_assignment());
            finish(c);
            decl.add(std::move(c));
            if (!accept(","))
                break;
        }
        expect("}");
        finish(decl);
        return decl;
    }

    // --------------------------------------------------------- C types

    struct TypeSpec {
        std::string text;
        std::string user_type;  ///< non-builtin part, for TYPE_REF
        std::size_t begin = 0;
    };

    struct Declarator {
        std::string name;
        const Token* name_tok = nullptr;
        std::string pointer;
        std::string suffix;
        std::vector<SyntaxTree> dims;
        bool is_function = false;
        std::vector<SyntaxTree> params;
    };

    SyntaxTree type_ref(const std::string& type, const Token& at) const
    {
        SyntaxTree t = node(k::kTypeRef, type, at);
        return t;
    }

    bool is_c_type_word(const Token& t) const
    {
        return t.kind == TokKind::Ident &&
               (kCBuiltinTypes.contains(t.text) || kCQualifiers.contains(t.text) || t.text == "struct" ||
                t.text == "union" || t.text == "enum");
    }

    std::optional<TypeSpec> parse_c_type_spec()
    {
        const Token& first = peek();
        TypeSpec spec;
        spec.begin = first.begin;
        bool has_base = false;
        bool any = false;
        while (true) {
            const Token& t = peek();
            if (t.kind != TokKind::Ident)
                break;
            if (kCQualifiers.contains(t.text)) {
                ++i_;
                any = true;
                continue;
            }
            if (kCBuiltinTypes.contains(t.text)) {
                ++i_;
                any = has_base = true;
                continue;
            }
            if (t.text == "struct" || t.text == "union" || t.text == "enum") {
                if (!is_ident(1))
                    throw Unsupported{i_};
                if (check("{", 2))
                    throw Unsupported{i_};
                i_ += 2;
                spec.user_type = t.text + " " + prev().text;
                any = has_base = true;
                continue;
            }
            if (!has_base && (typedefs_.contains(t.text) || is_ident(1) ||
                              (check("*", 1) && (is_ident(2) || check("*", 2) || check(")", 2))))) {
                ++i_;
                spec.user_type = t.text;
                any = has_base = true;
                continue;
            }
            break;
        }
        if (!any)
            return std::nullopt;
        spec.text = slice(first.begin, prev().end);
        return spec;
    }

    Declarator parse_declarator(bool allow_abstract)
    {
        Declarator d;
        while (check("*") || check("const") || check("restrict") || check("volatile")) {
            if (take().text == "*")
                d.pointer += '*';
        }
        if (check("(") && check("*", 1))
            throw Unsupported{i_};  // function pointer
        if (is_ident() && !kReservedStatementWords.contains(peek().text)) {
            d.name_tok = &take();
            d.name = d.name_tok->text;
        } else if (!allow_abstract) {
            throw Unsupported{i_};
        }
        while (check("[")) {
            std::size_t b = peek().begin;
            take();
            if (!check("]"))
                d.dims.push_back(parse_expression());
            expect("]");
            d.suffix += slice(b, prev().end);
        }
        if (check("(") && !d.name.empty()) {
            take();
            d.is_function = true;
            if (check("void") && check(")", 1))
                take();
            while (!check(")")) {
                if (accept("..."))
                    continue;
                const Token& pstart = peek();
                auto spec = parse_c_type_spec();
                if (!spec)
                    throw Unsupported{i_};
                Declarator pd = parse_declarator(/*allow_abstract=*/true);
                if (pd.is_function)
                    throw Unsupported{i_};
                const Token& at = pd.name_tok ? *pd.name_tok : pstart;
                SyntaxTree param = node(k::kVarDecl, pd.name, at);
                param.begin = pstart.begin;
                param.type = spec->text + pd.pointer + pd.suffix;
                if (!spec->user_type.empty())
                    param.add(type_ref(spec->user_type, at));
                for (auto& dim : pd.dims)
                    param.add(std::move(dim));
                finish(param);
                d.params.push_back(std::move(param));
                if (!accept(","))
                    break;
            }
            expect(")");
        }
        return d;
    }

    void parse_c_var_declarators(SyntaxTree& parent, const TypeSpec& spec, const Token& start,
                                 bool file_level, std::optional<Declarator> first = std::nullopt)
    {
        (void)file_level;
        bool first_decl = true;
        do {
            Declarator d = (first_decl && first) ? std::move(*first) : parse_declarator(false);
            first_decl = false;
            if (d.is_function) {
                // prototype inside a declaration list, e.g. `int f(int), g;`
                SyntaxTree fn = node(k::kFunctionDecl, d.name, *d.name_tok);
                fn.type = spec.text + d.pointer;
                for (auto& p : d.params)
                    fn.add(std::move(p));
                finish(fn);
                parent.add(std::move(fn));
                continue;
            }
            parent.add(make_var_decl(spec, d, start));
        } while (accept(","));
        expect(";");
    }

    SyntaxTree make_var_decl(const TypeSpec& spec, Declarator& d, const Token& start)
    {
        SyntaxTree var = node(k::kVarDecl, d.name, *d.name_tok);
        var.begin = start.begin;
        var.type = spec.text + d.pointer + d.suffix;
        if (!spec.user_type.empty())
            var.add(type_ref(spec.user_type, *d.name_tok));
        for (auto& dim : d.dims)
            var.add(std::move(dim));
        if (accept("="))
            var.add(check("{") ? parse_init_list() : parse_assignment());
        finish(var);
        return var;
    }

    SyntaxTree parse_init_list()
    {
        const Token& open = take();
        SyntaxTree list = node(k::kInitListExpr, "", open);
        while (!check("}") && !at_end()) {
            if (check("{"))
                list.add(parse_init_list());
            else
                list.add(parse_assignment());
            if (!accept(","))
                break;
        }
        expect("}");
        finish(list);
        return list;
    }

    bool is_c_decl_start() const
    {
        const Token& t = peek();
        if (t.kind != TokKind::Ident)
            return false;
        if (is_c_type_word(t))
            return true;
        if (kReservedStatementWords.contains(t.text))
            return false;
        if (typedefs_.contains(t.text) && (is_ident(1) || check("*", 1)))
            return true;
        if (is_ident(1) && !kReservedStatementWords.contains(peek(1).text))
            return true;
        if (check("*", 1)) {
            std::size_t j = 1;
            while (check("*", j))
                ++j;
            if (is_ident(j) && (check("=", j + 1) || check(";", j + 1) || check(",", j + 1) ||
                                check("[", j + 1)))
                return true;
        }
        return false;
    }

    SyntaxTree parse_c_decl_stmt()
    {
        const Token& start = peek();
        SyntaxTree decl = node(k::kDeclStmt, "", start);
        if ((check("struct") || check("union")) && (check("{", 1) || (is_ident(1) && check("{", 2))))
            throw Unsupported{i_};
        auto spec = parse_c_type_spec();
        if (!spec)
            throw Unsupported{i_};
        do {
            Declarator d = parse_declarator(false);
            if (d.is_function)
                throw Unsupported{i_};
            decl.add(make_var_decl(*spec, d, start));
        } while (accept(","));
        expect(";");
        finish(decl);
        return decl;
    }

    // ------------------------------------------------------ Java / C# types

    const std::set<std::string_view>& primitives() const
    {
        return lang_ == Language::CSharp ? kCSharpPrimitives : kJavaPrimitives;
    }
    const std::set<std::string_view>& modifiers() const
    {
        return lang_ == Language::CSharp ? kCSharpModifiers : kJavaModifiers;
    }

    bool is_modifier(const Token& t) const
    {
        return t.kind == TokKind::Ident && modifiers().contains(t.text);
    }

    /// Parses a type at the cursor; returns its text, or nullopt (cursor
    /// unchanged) when the tokens do not form a type.
    std::optional<std::string> parse_oo_type()
    {
        std::size_t save = i_;
        if (!is_ident() || kReservedStatementWords.contains(peek().text) || peek().text == "return") {
            return std::nullopt;
        }
        const Token& first = take();
        bool primitive = primitives().contains(first.text);
        if (!primitive) {
            while (check(".") && is_ident(1))
                i_ += 2;
            if (check("<")) {
                int depth = 0;
                std::size_t j = i_;
                for (; j < toks_.size(); ++j) {
                    const Token& t = toks_[j];
                    if (t.kind == TokKind::Punct && t.text == "<")
                        ++depth;
                    else if (t.kind == TokKind::Punct && t.text == ">") {
                        if (--depth == 0)
                            break;
                    } else if (!(t.kind == TokKind::Ident ||
                                 (t.kind == TokKind::Punct &&
                                  (t.text == "," || t.text == "." || t.text == "?" || t.text == "[" ||
                                   t.text == "]")))) {
                        i_ = save;
                        return std::nullopt;
                    }
                }
                if (j >= toks_.size()) {
                    i_ = save;
                    return std::nullopt;
                }
                i_ = j + 1;
            }
        }
        if (lang_ == Language::CSharp && check("?"))
            take();
        while (check("[") && (check("]", 1) || check(",", 1))) {
            take();
            while (accept(",")) {}
            expect_or_restore("]", save);
        }
        return slice(first.begin, prev().end);
    }

    void expect_or_restore(std::string_view s, std::size_t save)
    {
        if (!accept(s)) {
            i_ = save;
            throw Unsupported{i_};
        }
    }

    bool type_needs_ref(const std::string& type) const
    {
        std::size_t i = 0;
        while (i < type.size()) {
            if (text::is_ident_start(type[i])) {
                std::size_t j = i;
                while (j < type.size() && text::is_ident_char(type[j]))
                    ++j;
                auto word = std::string_view(type).substr(i, j - i);
                if (!primitives().contains(word) && !kCBuiltinTypes.contains(word) &&
                    !kCQualifiers.contains(word) && word != "final" && word != "var")
                    return true;
                i = j;
            } else {
                ++i;
            }
        }
        return false;
    }

    bool is_oo_decl_start()
    {
        std::size_t save = i_;
        while (is_modifier(peek()) || check("final"))
            ++i_;
        bool result = false;
        try {
            auto type = parse_oo_type();
            if (type && is_ident() && !kReservedStatementWords.contains(peek().text)) {
                result = check("=", 1) || check(";", 1) || check(",", 1) || check("[", 1) ||
                         check(":", 1) || (lang_ == Language::CSharp && check("in", 1));
            }
        } catch (const Unsupported&) {
            result = false;
        }
        i_ = save;
        return result;
    }

    SyntaxTree parse_oo_decl_stmt()
    {
        const Token& start = peek();
        SyntaxTree decl = node(k::kDeclStmt, "", start);
        while (is_modifier(peek()) || check("final"))
            take();
        auto type = parse_oo_type();
        if (!type)
            throw Unsupported{i_};
        do {
            decl.add(parse_oo_var(*type, start, k::kVarDecl));
        } while (accept(","));
        expect(";");
        finish(decl);
        return decl;
    }

    SyntaxTree parse_oo_var(const std::string& type, const Token& start, std::string_view kind)
    {
        if (!is_ident())
            throw Unsupported{i_};
        const Token& name = take();
        SyntaxTree var = node(kind, name.text, name);
        var.begin = start.begin;
        var.type = type;
        std::string suffix;
        while (check("[") && check("]", 1)) {
            i_ += 2;
            suffix += "[]";
        }
        var.type += suffix;
        if (type_needs_ref(type))
            var.add(type_ref(type, name));
        if (accept("="))
            var.add(check("{") ? parse_init_list() : parse_assignment());
        finish(var);
        return var;
    }

    // -------------------------------------------------- Java / C# members

    void skip_annotations()
    {
        while (true) {
            if (lang_ == Language::Java && check("@") && is_ident(1) && !check("interface", 1)) {
                i_ += 2;
                while (check(".") && is_ident(1))
                    i_ += 2;
                if (check("("))
                    skip_balanced("(", ")");
                continue;
            }
            if (lang_ == Language::CSharp && check("[") && is_ident(1)) {
                skip_balanced("[", "]");
                continue;
            }
            break;
        }
    }

    void skip_balanced(std::string_view open, std::string_view close)
    {
        int depth = 0;
        while (!at_end()) {
            if (check(open))
                ++depth;
            else if (check(close) && --depth == 0) {
                take();
                return;
            }
            take();
        }
    }

    void parse_oo_members(SyntaxTree& parent, const std::string& class_name, bool top)
    {
        while (!at_end() && !(!top && check("}"))) {
            if (top && check("}")) {
                take();  // closing brace of a namespace block
                continue;
            }
            std::size_t start = i_;
            try {
                parse_oo_member(parent, class_name, top);
            } catch (const Unsupported&) {
                parent.add(recover(start));
            }
        }
    }

    void parse_oo_member(SyntaxTree& parent, const std::string& class_name, bool top)
    {
        if (accept(";"))
            return;
        if (top && (check("package") || check("import") || (check("using") && !check("(", 1)))) {
            while (!at_end() && !check(";"))
                take();
            accept(";");
            return;
        }
        if (top && check("namespace")) {
            take();
            while (is_ident() || check("."))
                take();
            if (accept(";"))
                return;
            expect("{");
            return;  // members follow at top level; the closing brace is skipped there
        }
        skip_annotations();
        const Token& start = peek();
        while (is_modifier(peek()) || (lang_ == Language::CSharp && check("new") && is_ident(1)))
            take();
        if (check("class") || check("interface") || check("struct") || check("record") ||
            (check("@") && check("interface", 1))) {
            accept("@");
            const Token& kw = take();
            if (!is_ident())
                throw Unsupported{i_};
            const Token& name = take();
            auto kind = kw.text == "struct" ? k::kStructDecl : k::kClassDecl;
            SyntaxTree cls = node(kind, name.text, start);
            while (!check("{") && !at_end())
                take();  // generics, extends, implements, record components
            expect("{");
            parse_oo_members(cls, name.text, false);
            expect("}");
            finish(cls);
            parent.add(std::move(cls));
            return;
        }
        if (check("enum")) {
            take();
            if (!is_ident())
                throw Unsupported{i_};
            const Token& name = take();
            SyntaxTree en = node(k::kEnumDecl, name.text, start);
            while (!check("{") && !at_end())
                take();
            expect("{");
            while (is_ident()) {
                const Token& c = take();
                SyntaxTree ec = node(k::kEnumConstantDecl, c.text, c);
                if (accept("="))
                    ec.add(parse_assignment());
                else if (check("("))
                    skip_balanced("(", ")");
                finish(ec);
                en.add(std::move(ec));
                if (!accept(","))
                    break;
            }
            int depth = 1;
            while (!at_end() && depth > 0) {
                if (check("{"))
                    ++depth;
                else if (check("}"))
                    --depth;
                if (depth > 0)
                    take();
            }
            expect("}");
            finish(en);
            parent.add(std::move(en));
            return;
        }
        if (top)
            throw Unsupported{i_};
        if (check("{")) {  // initializer block
            parent.add(parse_compound());
            return;
        }
        if (check("<"))
            skip_balanced("<", ">");
        // constructor
        if (is_ident() && peek().text == class_name && check("(", 1)) {
            const Token& name = take();
            parent.add(parse_method_rest(start, name, ""));
            return;
        }
        auto type = parse_oo_type();
        if (!type || !is_ident())
            throw Unsupported{i_};
        if (check("(", 1)) {
            const Token& name = take();
            parent.add(parse_method_rest(start, name, *type));
            return;
        }
        if (lang_ == Language::CSharp && check("{", 1))
            throw Unsupported{i_};  // property
        do {
            parent.add(parse_oo_var(*type, start, k::kFieldDecl));
        } while (accept(","));
        expect(";");
    }

    SyntaxTree parse_method_rest(const Token& start, const Token& name, const std::string& ret)
    {
        SyntaxTree m = node(k::kMethodDecl, name.text, start);
        m.type = ret;
        if (!ret.empty() && type_needs_ref(ret))
            m.add(type_ref(ret, name));
        expect("(");
        while (!check(")") && !at_end()) {
            skip_annotations();
            const Token& pstart = peek();
            while (check("final") || check("ref") || check("out") || check("params") || check("in") ||
                   check("this"))
                take();
            auto type = parse_oo_type();
            if (!type)
                throw Unsupported{i_};
            if (lang_ == Language::Java && accept("..."))
                *type += "...";
            SyntaxTree p = parse_oo_var(*type, pstart, k::kVarDecl);
            m.add(std::move(p));
            if (!accept(","))
                break;
        }
        expect(")");
        while (check("[") && check("]", 1))
            i_ += 2;
        if (accept("throws")) {
            while (!check("{") && !check(";") && !at_end())
                take();
        }
        if (lang_ == Language::CSharp && check(":"))
            throw Unsupported{i_};  // constructor initializer
        if (lang_ == Language::CSharp && check("=>"))
            throw Unsupported{i_};
        if (check("{"))
            m.add(parse_compound());
        else
            expect(";");
        finish(m);
        return m;
    }

    // --------------------------------------------------------- statements

    SyntaxTree parse_compound()
    {
        const Token& open = peek();
        expect("{");
        SyntaxTree block = node(k::kCompoundStmt, "", open);
        while (!check("}") && !at_end())
            block.add(parse_statement());
        expect("}");
        finish(block);
        return block;
    }

    SyntaxTree parse_statement()
    {
        std::size_t start = i_;
        try {
            return parse_statement_inner();
        } catch (const Unsupported&) {
            return recover(start);
        }
    }

    bool is_decl_start()
    {
        return lang_ == Language::C ? is_c_decl_start() : is_oo_decl_start();
    }

    SyntaxTree parse_statement_inner()
    {
        const Token& t = peek();
        if (t.kind == TokKind::Punct) {
            if (t.text == "{")
                return parse_compound();
            if (t.text == ";") {
                take();
                SyntaxTree n = node(k::kNullStmt, "", t);
                return n;
            }
        }
        if (t.kind == TokKind::Ident) {
            const std::string& w = t.text;
            if (w == "if")
                return parse_if();
            if (w == "while")
                return parse_while();
            if (w == "do")
                return parse_do();
            if (w == "for" || (w == "foreach" && lang_ == Language::CSharp))
                return parse_for();
            if (w == "switch")
                return parse_switch();
            if (w == "return") {
                take();
                SyntaxTree r = node(k::kReturnStmt, "", t);
                if (!check(";"))
                    r.add(parse_expression());
                expect(";");
                finish(r);
                return r;
            }
            if (w == "break" || w == "continue") {
                take();
                SyntaxTree n = node(w == "break" ? k::kBreakStmt : k::kContinueStmt, "", t);
                if (lang_ == Language::Java && is_ident())
                    n.label = take().text;
                expect(";");
                finish(n);
                return n;
            }
            if (w == "goto" || w == "try" || w == "throw" || w == "synchronized" || w == "lock" ||
                w == "using" || w == "yield" || w == "checked" || w == "unchecked" || w == "fixed" ||
                w == "unsafe" || w == "case" || w == "default" || w == "else" || w == "asm" ||
                w == "__asm__")
                throw Unsupported{i_};
            if (check(":", 1) && !kReservedStatementWords.contains(w)) {
                take();
                take();
                SyntaxTree l = node(k::kLabelStmt, w, t);
                if (!check("}"))
                    l.add(parse_statement());
                finish(l);
                return l;
            }
            if (lang_ == Language::C && (w == "struct" || w == "union" || w == "enum") &&
                (check("{", 1) || check("{", 2)))
                throw Unsupported{i_};
            if (is_decl_start())
                return lang_ == Language::C ? parse_c_decl_stmt() : parse_oo_decl_stmt();
        }
        SyntaxTree e = parse_expression();
        expect(";");
        return e;
    }

    SyntaxTree parse_paren_condition()
    {
        expect("(");
        SyntaxTree c = parse_expression();
        expect(")");
        return c;
    }

    SyntaxTree parse_if()
    {
        const Token& kw = take();
        SyntaxTree n = node(k::kIfStmt, "", kw);
        n.add(parse_paren_condition());
        n.add(parse_statement());
        if (accept("else"))
            n.add(parse_statement());
        finish(n);
        return n;
    }

    SyntaxTree parse_while()
    {
        const Token& kw = take();
        SyntaxTree n = node(k::kWhileStmt, "", kw);
        n.add(parse_paren_condition());
        n.add(parse_statement());
        finish(n);
        return n;
    }

    SyntaxTree parse_do()
    {
        const Token& kw = take();
        SyntaxTree n = node(k::kDoStmt, "", kw);
        n.add(parse_statement());
        expect("while");
        n.add(parse_paren_condition());
        expect(";");
        finish(n);
        return n;
    }

    SyntaxTree null_at(const Token& t) const { return node(k::kNullStmt, "", t); }

    SyntaxTree parse_for()
    {
        const Token& kw = take();
        expect("(");
        // for-each: Java `for (T x : xs)`, C# `foreach (T x in xs)`
        if (lang_ != Language::C) {
            std::size_t save = i_;
            while (check("final"))
                take();
            const Token& tstart = peek();
            auto type = parse_oo_type();
            if (type && is_ident() && (check(":", 1) || check("in", 1))) {
                SyntaxTree n = node(k::kForEachStmt, "", kw);
                const Token& name = take();
                SyntaxTree var = node(k::kVarDecl, name.text, name);
                var.begin = tstart.begin;
                var.type = *type;
                if (type_needs_ref(*type))
                    var.add(type_ref(*type, name));
                finish(var);
                n.add(std::move(var));
                take();  // ':' or 'in'
                n.add(parse_expression());
                expect(")");
                n.add(parse_statement());
                finish(n);
                return n;
            }
            i_ = save;
        }
        SyntaxTree n = node(k::kForStmt, "", kw);
        if (check(";")) {
            n.add(null_at(peek()));
            take();
        } else if (is_decl_start()) {
            n.add(lang_ == Language::C ? parse_c_decl_stmt() : parse_oo_decl_stmt());
        } else {
            n.add(parse_expression());
            expect(";");
        }
        if (check(";"))
            n.add(null_at(peek()));
        else
            n.add(parse_expression());
        expect(";");
        if (check(")"))
            n.add(null_at(peek()));
        else
            n.add(parse_expression());
        expect(")");
        n.add(parse_statement());
        finish(n);
        return n;
    }

    SyntaxTree parse_switch()
    {
        const Token& kw = take();
        SyntaxTree n = node(k::kSwitchStmt, "", kw);
        n.add(parse_paren_condition());
        const Token& open = peek();
        expect("{");
        SyntaxTree body = node(k::kCompoundStmt, "", open);
        SyntaxTree* group = nullptr;
        while (!check("}") && !at_end()) {
            if (check("case")) {
                const Token& ck = take();
                std::size_t vb = peek().begin;
                SyntaxTree value = parse_conditional();
                std::string label = slice(vb, prev().end);
                expect(":");
                SyntaxTree c = node(k::kCaseStmt, label, ck);
                c.add(std::move(value));
                finish(c);
                group = &body.add(std::move(c));
                continue;
            }
            if (check("default") && check(":", 1)) {
                const Token& dk = take();
                take();
                SyntaxTree d = node(k::kDefaultStmt, "", dk);
                finish(d);
                group = &body.add(std::move(d));
                continue;
            }
            SyntaxTree s = parse_statement();
            if (group) {
                group->add(std::move(s));
                group->end = prev().end;
            } else {
                body.add(std::move(s));
            }
        }
        expect("}");
        finish(body);
        n.add(std::move(body));
        finish(n);
        return n;
    }

    // -------------------------------------------------------- expressions

    SyntaxTree binary(const std::string& op, SyntaxTree lhs, SyntaxTree rhs) const
    {
        SyntaxTree n(std::string(k::kBinaryOperator), op, lhs.span);
        n.begin = lhs.begin;
        n.end = rhs.end;
        n.add(std::move(lhs));
        n.add(std::move(rhs));
        return n;
    }

    SyntaxTree parse_expression()
    {
        SyntaxTree lhs = parse_assignment();
        while (check(",")) {
            take();
            SyntaxTree rhs = parse_assignment();
            lhs = binary(",", std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    /// Operator at the cursor with adjacent '>' tokens fused (Java/C# lex
    /// them singly so generics close cleanly). Sets `count` to the number of
    /// tokens it spans.
    std::string peek_op(std::size_t& count) const
    {
        const Token& t = peek();
        count = 1;
        if (t.kind != TokKind::Punct && !(t.kind == TokKind::Ident &&
                                          (t.text == "instanceof" || t.text == "is" || t.text == "as")))
            return {};
        std::string op = t.text;
        if (lang_ != Language::C && op == ">") {
            std::size_t j = 1;
            std::size_t end = t.end;
            while (peek(j).kind == TokKind::Punct && peek(j).begin == end &&
                   (peek(j).text == ">" || peek(j).text == ">=" || peek(j).text == "=")) {
                op += peek(j).text;
                end = peek(j).end;
                ++j;
                if (op.back() == '=')
                    break;
            }
            count = j;
        }
        return op;
    }

    static bool is_assign_op(const std::string& op)
    {
        static const std::set<std::string_view> kOps{
            "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=", "?\?=",
        };
        return kOps.contains(op);
    }

    SyntaxTree parse_assignment()
    {
        SyntaxTree lhs = parse_conditional();
        std::size_t count = 0;
        std::string op = peek_op(count);
        if (is_assign_op(op)) {
            i_ += count;
            SyntaxTree rhs = parse_assignment();
            return binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    SyntaxTree parse_conditional()
    {
        SyntaxTree c = parse_binary(0);
        if (check("?")) {
            take();
            SyntaxTree a = parse_assignment();
            expect(":");
            SyntaxTree b = parse_conditional();
            SyntaxTree n(std::string(k::kConditionalOperator), "?:", c.span);
            n.begin = c.begin;
            n.end = b.end;
            n.add(std::move(c));
            n.add(std::move(a));
            n.add(std::move(b));
            return n;
        }
        return c;
    }

    static const std::vector<std::vector<std::string_view>>& levels()
    {
        static const std::vector<std::vector<std::string_view>> kLevels{
            {"??"},
            {"||"},
            {"&&"},
            {"|"},
            {"^"},
            {"&"},
            {"==", "!="},
            {"<", ">", "<=", ">=", "instanceof", "is", "as"},
            {"<<", ">>", ">>>"},
            {"+", "-"},
            {"*", "/", "%"},
        };
        return kLevels;
    }

    SyntaxTree parse_binary(std::size_t level)
    {
        if (level >= levels().size())
            return parse_unary();
        SyntaxTree lhs = parse_binary(level + 1);
        while (true) {
            std::size_t count = 0;
            std::string op = peek_op(count);
            const auto& ops = levels()[level];
            if (std::find(ops.begin(), ops.end(), op) == ops.end())
                break;
            if (lang_ == Language::C && (op == "is" || op == "as" || op == "instanceof"))
                break;
            i_ += count;
            if (op == "instanceof" || op == "is" || op == "as") {
                const Token& at = peek();
                auto type = parse_oo_type();
                if (!type)
                    throw Unsupported{i_};
                SyntaxTree t = type_ref(*type, at);
                t.end = prev().end;
                if (lang_ == Language::Java && is_ident())
                    take();  // pattern variable
                lhs = binary(op, std::move(lhs), std::move(t));
                continue;
            }
            SyntaxTree rhs = parse_binary(level + 1);
            lhs = binary(op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    bool looks_like_cast() const
    {
        if (!check("("))
            return false;
        const Token& t = peek(1);
        if (t.kind != TokKind::Ident)
            return false;
        if (lang_ == Language::C) {
            if (is_c_type_word(t))
                return true;
            if (typedefs_.contains(t.text)) {
                std::size_t j = 2;
                while (check("*", j))
                    ++j;
                return check(")", j);
            }
            return false;
        }
        if (primitives().contains(t.text) && t.text != "string" && t.text != "object") {
            std::size_t j = 2;
            while (check("[", j) && check("]", j + 1))
                j += 2;
            return check(")", j) && !check(".", 2);
        }
        // `(Type) expr`: identifier in parens followed by an operand
        if (check(")", 2)) {
            const Token& after = peek(3);
            if (after.kind == TokKind::Ident && !kReservedStatementWords.contains(after.text) &&
                after.text != "instanceof" && after.text != "is" && after.text != "as")
                return std::isupper(static_cast<unsigned char>(t.text[0])) != 0;
            if (after.kind == TokKind::Number || after.kind == TokKind::String || after.kind == TokKind::Char)
                return true;
            if (after.kind == TokKind::Punct && after.text == "(")
                return std::isupper(static_cast<unsigned char>(t.text[0])) != 0;
        }
        return false;
    }

    SyntaxTree parse_unary()
    {
        const Token& t = peek();
        if (t.kind == TokKind::Punct) {
            static const std::set<std::string_view> kPrefix{"!", "~", "-", "+", "*", "&", "++", "--"};
            if (kPrefix.contains(t.text)) {
                take();
                SyntaxTree operand = parse_unary();
                SyntaxTree n = node(k::kUnaryOperator, t.text, t);
                n.add(std::move(operand));
                finish(n);
                return n;
            }
            if (looks_like_cast()) {
                take();
                std::size_t tb = peek().begin;
                if (lang_ == Language::C) {
                    auto spec = parse_c_type_spec();
                    if (!spec)
                        throw Unsupported{i_};
                    while (accept("*")) {}
                } else {
                    if (!parse_oo_type())
                        throw Unsupported{i_};
                }
                std::string type = slice(tb, prev().end);
                expect(")");
                SyntaxTree operand = parse_unary();
                SyntaxTree n = node(k::kCastExpr, type, t);
                n.add(std::move(operand));
                finish(n);
                return n;
            }
        }
        if (t.kind == TokKind::Ident && t.text == "sizeof") {
            take();
            SyntaxTree n = node(k::kSizeofExpr, "sizeof", t);
            if (check("(") && (is_c_type_word(peek(1)) || typedefs_.contains(peek(1).text))) {
                take();
                const Token& at = peek();
                auto spec = parse_c_type_spec();
                if (!spec)
                    throw Unsupported{i_};
                while (accept("*")) {}
                SyntaxTree ref = type_ref(slice(at.begin, prev().end), at);
                ref.end = prev().end;
                expect(")");
                n.add(std::move(ref));
            } else {
                n.add(parse_unary());
            }
            finish(n);
            return n;
        }
        if (t.kind == TokKind::Ident && t.text == "new" && lang_ != Language::C)
            return parse_postfix(parse_new());
        return parse_postfix(parse_primary());
    }

    SyntaxTree parse_new()
    {
        const Token& kw = take();
        const Token& at = peek();
        // type name without array suffix
        std::size_t tb = at.begin;
        if (!is_ident())
            throw Unsupported{i_};
        take();
        while (check(".") && is_ident(1))
            i_ += 2;
        if (check("<"))
            skip_balanced("<", ">");
        std::string type = slice(tb, prev().end);
        SyntaxTree n = node(k::kNewExpr, type, kw);
        if (check("(")) {
            take();
            while (!check(")") && !at_end()) {
                n.add(parse_assignment());
                if (!accept(","))
                    break;
            }
            expect(")");
            if (check("{"))
                throw Unsupported{i_};  // anonymous class
        } else if (check("[")) {
            std::string dims;
            while (check("[")) {
                take();
                if (check("]")) {
                    dims += "[]";
                } else {
                    n.add(parse_expression());
                    dims += "[]";
                    while (accept(",")) {
                        n.add(parse_expression());
                        dims.insert(dims.size() - 1, ",");
                    }
                }
                expect("]");
            }
            n.label += dims;
            if (check("{"))
                n.add(parse_init_list());
        } else {
            throw Unsupported{i_};
        }
        finish(n);
        return n;
    }

    SyntaxTree parse_primary()
    {
        const Token& t = peek();
        switch (t.kind) {
        case TokKind::Number: {
            take();
            bool is_float = t.text.find_first_of(".") != std::string::npos ||
                            (t.text.size() > 1 && t.text[1] != 'x' && t.text[1] != 'X' &&
                             t.text.find_first_of("eE") != std::string::npos) ||
                            ((t.text.back() == 'f' || t.text.back() == 'F' || t.text.back() == 'd' ||
                              t.text.back() == 'D') &&
                             !(t.text.size() > 1 && (t.text[1] == 'x' || t.text[1] == 'X')));
            SyntaxTree n = node(is_float ? k::kFloatingLiteral : k::kIntegerLiteral, t.text, t);
            return n;
        }
        case TokKind::String: {
            take();
            SyntaxTree n = node(k::kStringLiteral, t.text, t);
            while (peek().kind == TokKind::String)
                take();
            n.label = slice(t.begin, prev().end);
            finish(n);
            return n;
        }
        case TokKind::Char: {
            take();
            return node(k::kCharacterLiteral, t.text, t);
        }
        case TokKind::Ident: {
            if (t.text == "true" || t.text == "false") {
                take();
                return node(k::kBoolLiteral, t.text, t);
            }
            if (t.text == "null" || (lang_ == Language::C && t.text == "NULL")) {
                take();
                return node(k::kNullLiteral, t.text, t);
            }
            if (kReservedStatementWords.contains(t.text) && t.text != "default")
                throw Unsupported{i_};
            if (lang_ == Language::C && is_c_type_word(t))
                throw Unsupported{i_};
            take();
            return node(k::kDeclRefExpr, t.text, t);
        }
        case TokKind::Punct: {
            if (t.text == "(") {
                take();
                SyntaxTree inner = parse_expression();
                expect(")");
                // parentheses are transparent; widen the range to include them
                inner.begin = t.begin;
                inner.end = prev().end;
                inner.span = Span{t.line, t.col};
                return inner;
            }
            if (t.text == "{" && lang_ != Language::C)
                return parse_init_list();
            throw Unsupported{i_};
        }
        case TokKind::End:
            break;
        }
        throw Unsupported{i_};
    }

    SyntaxTree parse_postfix(SyntaxTree base)
    {
        while (true) {
            const Token& t = peek();
            if (t.kind != TokKind::Punct)
                break;
            if (t.text == "[") {
                take();
                SyntaxTree idx = parse_expression();
                expect("]");
                SyntaxTree n(std::string(k::kArraySubscriptExpr), "", base.span);
                n.begin = base.begin;
                n.add(std::move(base));
                n.add(std::move(idx));
                finish(n);
                base = std::move(n);
                continue;
            }
            if (t.text == "(") {
                take();
                SyntaxTree call(std::string(k::kCallExpr), "", base.span);
                call.begin = base.begin;
                if (base.kind == k::kDeclRefExpr) {
                    call.label = base.label;
                } else if (base.kind == k::kMemberRefExpr) {
                    call.label = base.label;
                    if (!base.children.empty())
                        call.add(std::move(base.children.front()));
                } else {
                    call.add(std::move(base));
                }
                while (!check(")") && !at_end()) {
                    if (lang_ == Language::CSharp && (check("ref") || check("out")))
                        take();
                    call.add(parse_assignment());
                    if (!accept(","))
                        break;
                }
                expect(")");
                finish(call);
                base = std::move(call);
                continue;
            }
            if (t.text == "." || t.text == "->" || t.text == "?.") {
                take();
                if (!is_ident())
                    throw Unsupported{i_};
                const Token& name = take();
                SyntaxTree n(std::string(k::kMemberRefExpr), name.text, base.span);
                n.begin = base.begin;
                n.add(std::move(base));
                finish(n);
                base = std::move(n);
                continue;
            }
            if (t.text == "++" || t.text == "--") {
                take();
                SyntaxTree n(std::string(k::kUnaryOperator), t.text, base.span);
                n.begin = base.begin;
                n.type = "postfix";
                n.add(std::move(base));
                finish(n);
                base = std::move(n);
                continue;
            }
            break;
        }
        return base;
    }

    std::string_view src_;
    Language lang_;
    Diagnostics* diag_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::set<std::string, std::less<>> typedefs_{
        "size_t", "FILE", "bool", "uint8_t", "uint16_t", "uint32_t", "uint64_t",
        "int8_t", "int16_t", "int32_t", "int64_t", "ptrdiff_t", "ssize_t", "wchar_t",
    };
};

}  // namespace

SyntaxTree parse_c(std::string_view source, Diagnostics* diag)
{
    return Parser(source, Language::C, diag).parse_c_file();
}

SyntaxTree parse_java(std::string_view source, Diagnostics* diag)
{
    return Parser(source, Language::Java, diag).parse_oo_file();
}

SyntaxTree parse_csharp(std::string_view source, Diagnostics* diag)
{
    return Parser(source, Language::CSharp, diag).parse_oo_file();
}

}  // namespace artgraph::frontend
