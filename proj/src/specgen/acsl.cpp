#include <algorithm>
#include <map>
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

struct Pending {
    GeneratedContract contract;
    Insertion insertion;
};

SpecClause acsl_clause(ClauseKind kind, std::string keyword, std::string text, const AttachTarget& target)
{
    SpecClause c;
    c.kind = kind;
    c.keyword = std::move(keyword);
    c.text = std::move(text);
    c.attach = target;
    c.dialect = Dialect::ACSL;
    return c;
}

void add_unique(std::vector<SpecClause>& clauses, SpecClause c)
{
    for (const auto& e : clauses)
        if (e.keyword == c.keyword && e.text == c.text)
            return;
    clauses.push_back(std::move(c));
}

bool is_int_type(const std::string& type)
{
    if (type.find('*') != std::string::npos || type.find('[') != std::string::npos)
        return false;
    static const std::set<std::string> kWords{"int", "long", "short", "unsigned", "signed", "char"};
    bool any = false;
    std::size_t i = 0;
    while (i < type.size()) {
        if (text::is_ident_start(type[i])) {
            std::size_t j = i;
            while (j < type.size() && text::is_ident_char(type[j]))
                ++j;
            std::string w = type.substr(i, j - i);
            if (w == "static" || w == "const" || w == "inline" || w == "extern")
                ;
            else if (kWords.contains(w) && w != "char")
                any = true;
            else
                return false;
            i = j;
        } else {
            ++i;
        }
    }
    return any;
}

bool is_pointer_type(const std::string& type)
{
    return type.find('*') != std::string::npos || type.find('[') != std::string::npos;
}

bool is_void_type(const std::string& type)
{
    return type.find("void") != std::string::npos && type.find('*') == std::string::npos;
}

std::vector<std::string> block_lines(const std::string& indent, const std::vector<SpecClause>& clauses)
{
    std::vector<std::string> lines;
    lines.push_back(indent + "/*@");
    for (const auto& c : clauses)
        lines.push_back(indent + "  " + c.keyword + " " + c.text + ";");
    lines.push_back(indent + "*/");
    return lines;
}

class AcslGenerator {
public:
    AcslGenerator(std::string_view src, const SyntaxTree& tree, std::set<TargetKey> existing, Diagnostics* diag)
        : src_(src), tree_(tree), existing_(std::move(existing)), diag_(diag)
    {
        for (const auto& n : tree_.children) {
            if (n.kind == k::kFunctionDecl && !n.children.empty() && n.children.back().kind == k::kCompoundStmt)
                defined_[n.label] = &n;
        }
    }

    GenResult run()
    {
        for (const auto& n : tree_.children) {
            if (n.kind != k::kFunctionDecl || n.children.empty() || n.children.back().kind != k::kCompoundStmt)
                continue;
            process_function(n);
        }
        std::stable_sort(pending_.begin(), pending_.end(), [](const Pending& a, const Pending& b) {
            return std::pair(a.insertion.before_line, a.insertion.order) <
                   std::pair(b.insertion.before_line, b.insertion.order);
        });
        GenResult out;
        std::vector<Insertion> ins;
        for (auto& p : pending_) {
            ins.push_back(p.insertion);
            out.contracts.push_back(std::move(p.contract));
        }
        out.text = apply_insertions(src_, std::move(ins));
        return out;
    }

private:
    struct FnContext {
        const SyntaxTree* fn = nullptr;
        const SyntaxTree* body = nullptr;
        AttachTarget target;
        std::map<std::string, std::string> params;  ///< name -> type
        std::set<std::string> locals;
        std::set<std::string> names;
        bool is_void = false;
        std::vector<SpecClause> requires_;
        std::vector<SpecClause> ensures;
        bool matched = false;
    };

    bool exists(const AttachTarget& t) const { return existing_.contains({t.kind, t.name, t.line}); }

    void process_function(const SyntaxTree& fn)
    {
        const SyntaxTree& body = fn.children.back();
        bool unknown = false;
        body.walk([&](const SyntaxTree& n, int) {
            if (n.kind == k::kUnknownStmt)
                unknown = true;
        });
        if (unknown) {
            if (diag_)
                diag_->warn("acsl-skip", "function '" + fn.label + "' has unparsed statements; skipped",
                            fn.span.line);
            return;
        }

        FnContext ctx;
        ctx.fn = &fn;
        ctx.body = &body;
        ctx.target = AttachTarget{AttachKind::Function, fn.label, fn.span.line};
        ctx.is_void = is_void_type(fn.type);
        for (const auto& c : fn.children)
            if (c.kind == k::kVarDecl)
                ctx.params[c.label] = c.type;
        fn.walk([&](const SyntaxTree& n, int) {
            if (n.kind == k::kVarDecl || n.kind == k::kDeclRefExpr)
                ctx.names.insert(n.label);
        });
        body.walk([&](const SyntaxTree& n, int) {
            if (n.kind == k::kVarDecl)
                ctx.locals.insert(n.label);
        });

        if (fn.label == "main") {
            process_main(ctx);
            return;
        }

        visit_block(ctx, body.children, true);

        std::vector<SpecClause> clauses = ctx.requires_;
        for (auto& e : ctx.ensures)
            add_unique(clauses, e);
        if (!ctx.matched && clauses.empty())
            clauses.push_back(assigns_clause(ctx));
        if (clauses.empty() || exists(ctx.target))
            return;
        Pending p;
        p.contract.target = ctx.target;
        p.contract.insertion = fn.span.line;
        p.contract.clauses = clauses;
        p.insertion.before_line = fn.span.line;
        p.insertion.order = 1;
        p.insertion.lines = block_lines(text::indentation_at(src_, fn.begin), clauses);
        pending_.push_back(std::move(p));
    }

    void visit_block(FnContext& ctx, const std::vector<SyntaxTree>& stmts, bool top)
    {
        for (std::size_t i = 0; i < stmts.size(); ++i)
            visit_stmt(ctx, stmts[i], &stmts, i, top);
    }

    void visit_stmt(FnContext& ctx, const SyntaxTree& st, const std::vector<SyntaxTree>* siblings,
                    std::size_t index, bool top)
    {
        if (st.kind == k::kIfStmt) {
            if (top && !ctx.is_void && !returns_before(siblings, index)) {
                const SyntaxTree* next = siblings && index + 1 < siblings->size() ? &(*siblings)[index + 1] : nullptr;
                dual_ensures(ctx, st, next);
            }
            for (std::size_t c = 1; c < st.children.size(); ++c)
                visit_child(ctx, st.children[c]);
            return;
        }
        if (st.kind == k::kSwitchStmt) {
            if (top && !ctx.is_void)
                switch_ensures(ctx, st);
            if (st.children.size() == 2) {
                for (const auto& group : st.children[1].children) {
                    if (group.kind == k::kCaseStmt || group.kind == k::kDefaultStmt) {
                        std::size_t first = group.kind == k::kCaseStmt ? 1 : 0;
                        for (std::size_t g = first; g < group.children.size(); ++g)
                            visit_stmt(ctx, group.children[g], &group.children, g, false);
                    } else {
                        visit_child(ctx, group);
                    }
                }
            }
            return;
        }
        if (st.kind == k::kForStmt || st.kind == k::kWhileStmt || st.kind == k::kDoStmt) {
            loop_contract(ctx, st, siblings, index, top);
            visit_child(ctx, loop_body(st));
            return;
        }
        if (st.kind == k::kCompoundStmt) {
            visit_block(ctx, st.children, false);
            return;
        }
        if (st.kind == k::kLabelStmt && !st.children.empty())
            visit_stmt(ctx, st.children.front(), nullptr, 0, false);
    }

    void visit_child(FnContext& ctx, const SyntaxTree& st)
    {
        if (st.kind == k::kCompoundStmt)
            visit_block(ctx, st.children, false);
        else
            visit_stmt(ctx, st, nullptr, 0, false);
    }

    /// An earlier return would make the negated condition claim too much.
    static bool returns_before(const std::vector<SyntaxTree>* siblings, std::size_t index)
    {
        if (!siblings)
            return false;
        bool found = false;
        for (std::size_t i = 0; i < index && !found; ++i)
            (*siblings)[i].walk([&](const SyntaxTree& n, int) { found = found || n.kind == k::kReturnStmt; });
        return found;
    }

    /// `if (C) return a; else return b;`, or `if (C) return a;` directly
    /// followed by `return b;`.
    void dual_ensures(FnContext& ctx, const SyntaxTree& ifs, const SyntaxTree* next)
    {
        const SyntaxTree* other = nullptr;
        if (ifs.children.size() == 3)
            other = &ifs.children[2];
        else if (ifs.children.size() == 2 && next && next->kind == k::kReturnStmt)
            other = next;
        if (!other)
            return;
        const SyntaxTree* e1 = trailing_return(ifs.children[1]);
        const SyntaxTree* e2 = trailing_return(*other);
        if (!e1 || !e2)
            return;
        std::string c = slice(src_, ifs.children[0]);
        ctx.matched = true;
        add_unique(ctx.ensures, acsl_clause(ClauseKind::Ensures, "ensures",
                                            "(" + c + ") ==> \\result == " + slice(src_, *e1), ctx.target));
        add_unique(ctx.ensures, acsl_clause(ClauseKind::Ensures, "ensures",
                                            "!(" + c + ") ==> \\result == " + slice(src_, *e2), ctx.target));
    }

    void switch_ensures(FnContext& ctx, const SyntaxTree& sw)
    {
        if (sw.children.size() != 2)
            return;
        std::string s = slice(src_, sw.children[0]);
        std::vector<std::string> all_labels;
        for (const auto& g : sw.children[1].children)
            if (g.kind == k::kCaseStmt && !g.children.empty())
                all_labels.push_back(slice(src_, g.children[0]));

        std::vector<std::string> pending;
        for (const auto& g : sw.children[1].children) {
            bool is_case = g.kind == k::kCaseStmt;
            if (!is_case && g.kind != k::kDefaultStmt)
                continue;
            if (is_case && !g.children.empty())
                pending.push_back(slice(src_, g.children[0]));
            std::size_t first = is_case ? 1 : 0;
            if (g.children.size() <= first)
                continue;
            const SyntaxTree* e = trailing_return(g.children.back());
            if (e) {
                std::string cond;
                if (is_case) {
                    for (std::size_t i = 0; i < pending.size(); ++i)
                        cond += (i ? " || " : "") + s + " == " + pending[i];
                } else {
                    for (std::size_t i = 0; i < all_labels.size(); ++i)
                        cond += (i ? " && " : "") + s + " != " + all_labels[i];
                }
                if (!cond.empty()) {
                    ctx.matched = true;
                    add_unique(ctx.ensures, acsl_clause(ClauseKind::Ensures, "ensures",
                                                        "(" + cond + ") ==> \\result == " + slice(src_, *e),
                                                        ctx.target));
                }
            }
            pending.clear();
        }
    }

    std::string fresh_name(const FnContext& ctx) const
    {
        if (!ctx.names.contains("k"))
            return "k";
        for (int i = 0;; ++i) {
            std::string n = "k" + std::to_string(i);
            if (!ctx.names.contains(n))
                return n;
        }
    }

    bool is_array_param(const FnContext& ctx, const std::string& name) const
    {
        auto it = ctx.params.find(name);
        return it != ctx.params.end() && is_pointer_type(it->second);
    }

    void loop_contract(FnContext& ctx, const SyntaxTree& loop, const std::vector<SyntaxTree>* siblings,
                       std::size_t index, bool top)
    {
        auto shape = analyze_loop(src_, loop, siblings, index);
        if (!shape)
            return;
        AttachTarget target{AttachKind::Loop,
                            loop.kind == k::kForStmt ? "for" : loop.kind == k::kWhileStmt ? "while" : "do",
                            loop.span.line};
        std::vector<SpecClause> clauses;
        const SyntaxTree& body = loop_body(loop);
        if (shape->recognized()) {
            const std::string& i = shape->var;
            const std::string& lo = shape->lo;
            const std::string& n = shape->bound;
            clauses.push_back(
                acsl_clause(ClauseKind::Invariant, "loop invariant", lo + " <= " + i + " <= " + n, target));

            std::vector<std::string> accessed;
            body.walk([&](const SyntaxTree& node, int) {
                if (node.kind == k::kArraySubscriptExpr && node.children.size() == 2 &&
                    node.children[0].kind == k::kDeclRefExpr && node.children[1].kind == k::kDeclRefExpr &&
                    node.children[1].label == i && is_array_param(ctx, node.children[0].label) &&
                    std::find(accessed.begin(), accessed.end(), node.children[0].label) == accessed.end())
                    accessed.push_back(node.children[0].label);
            });
            for (const auto& a : accessed) {
                add_unique(ctx.requires_, acsl_clause(ClauseKind::Requires, "requires",
                                                      "\\valid(" + a + " + (" + lo + " .. " + n + "-1))",
                                                      ctx.target));
            }

            if (top) {
                body.walk([&](const SyntaxTree& node, int) {
                    if (node.kind != k::kBinaryOperator || node.label != "=" || node.children.size() != 2)
                        return;
                    const SyntaxTree& lhs = node.children[0];
                    if (lhs.kind != k::kArraySubscriptExpr || lhs.children.size() != 2 ||
                        lhs.children[0].kind != k::kDeclRefExpr || lhs.children[1].kind != k::kDeclRefExpr ||
                        lhs.children[1].label != i || !is_array_param(ctx, lhs.children[0].label))
                        return;
                    const std::string& a = lhs.children[0].label;
                    std::set<std::string> refs;
                    collect_refs(node.children[1], refs);
                    bool has_call = false;
                    node.children[1].walk([&](const SyntaxTree& x, int) {
                        if (x.kind == k::kCallExpr || x.kind == k::kArraySubscriptExpr)
                            has_call = true;
                    });
                    if (has_call)
                        return;
                    for (const auto& r : refs) {
                        if (r == i)
                            continue;
                        auto it = ctx.params.find(r);
                        if (it == ctx.params.end() || is_pointer_type(it->second) ||
                            count_writes(*ctx.body, r) > 0)
                            return;
                    }
                    std::string kv = fresh_name(ctx);
                    std::string v = text::replace_word(slice(src_, node.children[1]), i, kv);
                    ctx.ensures.push_back(acsl_clause(
                        ClauseKind::Ensures, "ensures",
                        "\\forall integer " + kv + "; " + lo + " <= " + kv + " < " + n + " ==> " + a + "[" + kv +
                            "] == " + v,
                        ctx.target));
                    clauses.push_back(acsl_clause(ClauseKind::Invariant, "loop invariant",
                                                  "\\forall integer " + kv + "; " + lo + " <= " + kv + " < " + i +
                                                      " ==> " + a + "[" + kv + "] == " + v,
                                                  target));
                });
            }
        }
        if (auto v = shape->variant())
            clauses.push_back(acsl_clause(ClauseKind::Decreases, "loop variant", *v, target));
        std::vector<SpecClause> unique;
        for (auto& c : clauses)
            add_unique(unique, std::move(c));
        if (unique.empty())
            return;
        ctx.matched = true;
        if (exists(target))
            return;
        Pending p;
        p.contract.target = target;
        p.contract.insertion = loop.span.line;
        p.contract.clauses = unique;
        p.insertion.before_line = loop.span.line;
        p.insertion.order = 2;
        p.insertion.lines = block_lines(text::indentation_at(src_, loop.begin), unique);
        pending_.push_back(std::move(p));
    }

    SpecClause assigns_clause(const FnContext& ctx) const
    {
        std::vector<std::string> written;
        auto note = [&](std::string w) {
            if (std::find(written.begin(), written.end(), w) == written.end())
                written.push_back(std::move(w));
        };
        ctx.body->walk([&](const SyntaxTree& n, int) {
            const SyntaxTree* t = written_target(n);
            if (!t)
                return;
            std::string root = root_name(*t);
            if (root.empty() || ctx.locals.contains(root))
                return;
            auto param = ctx.params.find(root);
            bool by_value = param != ctx.params.end() && !is_pointer_type(param->second);
            if (t->kind == k::kDeclRefExpr) {
                if (param == ctx.params.end())
                    note(root);
                return;
            }
            if (t->kind == k::kArraySubscriptExpr) {
                note(root_name(*t) + "[..]");
                return;
            }
            if (by_value && slice(src_, *t).find("->") == std::string::npos)
                return;
            note(slice(src_, *t));
        });
        std::string text = written.empty() ? "\\nothing" : text::join(written, ", ");
        return acsl_clause(ClauseKind::Assigns, "assigns", text, ctx.target);
    }

    void process_main(FnContext& ctx)
    {
        if (exists(ctx.target))
            return;
        GeneratedContract contract;
        contract.target = ctx.target;
        contract.insertion = ctx.fn->span.line;
        std::vector<Insertion> inserts;
        std::set<std::string> seen;
        ctx.body->walk([&](const SyntaxTree& st, int) {
            const SyntaxTree* call = nullptr;
            std::string result;
            if (st.kind == k::kBinaryOperator && st.label == "=" && st.children.size() == 2 &&
                st.children[0].kind == k::kDeclRefExpr && st.children[1].kind == k::kCallExpr) {
                result = st.children[0].label;
                call = &st.children[1];
            } else if (st.kind == k::kDeclStmt && st.children.size() == 1) {
                const SyntaxTree& v = st.children[0];
                if (!v.children.empty() && v.children.back().kind == k::kCallExpr) {
                    result = v.label;
                    call = &v.children.back();
                }
            }
            if (!call || call->children.empty())
                return;
            auto callee = defined_.find(call->label);
            if (callee == defined_.end() || callee->second->label == "main" || !is_int_type(callee->second->type))
                return;
            for (const auto& arg : call->children) {
                bool literal = arg.kind == k::kIntegerLiteral ||
                               (arg.kind == k::kUnaryOperator && arg.label == "-" && arg.children.size() == 1 &&
                                arg.children[0].kind == k::kIntegerLiteral);
                if (!literal)
                    return;
            }
            std::size_t end = st.end;
            while (end < src_.size() && (src_[end] == ' ' || src_[end] == '\t'))
                ++end;
            if (end >= src_.size() || src_[end] != ';') {
                if (st.kind != k::kDeclStmt)
                    return;
                end = st.end - 1;
            }
            std::size_t eol = src_.find('\n', end);
            std::string_view rest = src_.substr(end + 1, (eol == std::string_view::npos ? src_.size() : eol) - end - 1);
            if (!text::trim(rest).empty())
                return;
            if (eol == std::string_view::npos)
                return;
            std::string clause_text = result + " != -1";
            if (!seen.insert(clause_text).second)
                return;
            text::LineIndex lines(src_);
            SpecClause c = acsl_clause(ClauseKind::Assert, "assert", clause_text, ctx.target);
            contract.clauses.push_back(c);
            Insertion ins;
            ins.before_line = lines.line_of(eol) + 1;
            ins.order = 0;
            ins.lines.push_back(text::indentation_at(src_, st.begin) + "//@ assert " + clause_text + ";");
            inserts.push_back(std::move(ins));
        });
        if (contract.clauses.empty())
            return;
        // One contract per assertion keeps output order aligned with the text.
        for (std::size_t i = 0; i < inserts.size(); ++i) {
            Pending p;
            p.contract.target = contract.target;
            p.contract.insertion = contract.insertion;
            p.contract.clauses = {contract.clauses[i]};
            p.insertion = inserts[i];
            pending_.push_back(std::move(p));
        }
    }

    std::string_view src_;
    const SyntaxTree& tree_;
    std::set<TargetKey> existing_;
    Diagnostics* diag_;
    std::map<std::string, const SyntaxTree*> defined_;
    std::vector<Pending> pending_;
};

}  // namespace

GenResult gen_acsl(std::string_view source, Diagnostics* diag)
{
    SyntaxTree tree;
    std::set<TargetKey> existing;
    try {
        tree = frontend::parse_c(source, diag);
        for (const auto& c : frontend::extract_annotations(source, Dialect::ACSL, nullptr))
            existing.insert({c.attach.kind, c.attach.name, c.attach.line});
    } catch (const frontend::ParseError& e) {
        if (diag)
            diag->warn("acsl-skip", std::string("file not parsed: ") + e.what(), e.line());
        return GenResult{std::string(source), {}};
    }
    return AcslGenerator(source, tree, std::move(existing), diag).run();
}

}  // namespace artgraph::specgen
