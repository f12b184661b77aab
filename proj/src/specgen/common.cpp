#include "common.hpp"

#include <algorithm>

#include "artgraph/specgen.hpp"
#include "artgraph/text_util.hpp"

namespace artgraph::specgen {

namespace k = kinds;

std::size_t GenResult::clause_count() const
{
    std::size_t n = 0;
    for (const auto& c : contracts)
        n += c.clauses.size();
    return n;
}

std::vector<SpecClause> GenResult::all_clauses() const
{
    std::vector<SpecClause> out;
    for (const auto& c : contracts)
        out.insert(out.end(), c.clauses.begin(), c.clauses.end());
    return out;
}

std::string strip_annotations(std::string_view text)
{
    std::string out;
    std::size_t i = 0;
    bool in_block = false;
    while (i < text.size()) {
        std::size_t e = text.find('\n', i);
        std::size_t next = e == std::string_view::npos ? text.size() : e + 1;
        std::string_view line = text.substr(i, next - i);
        std::string_view t = text::trim(line);
        if (in_block) {
            if (t.size() >= 2 && t.substr(t.size() - 2) == "*/")
                in_block = false;
        } else if (t.starts_with("//@")) {
        } else if (t.starts_with("/*@")) {
            std::size_t close = t.find("*/", 3);
            if (close == std::string_view::npos)
                in_block = true;
            else if (close + 2 != t.size())
                out.append(line);
        } else {
            out.append(line);
        }
        i = next;
    }
    return out;
}

namespace detail {

std::string slice(std::string_view src, const SyntaxTree& n)
{
    if (n.end <= n.begin || n.end > src.size())
        return n.label;
    return text::normalize_ws(src.substr(n.begin, n.end - n.begin));
}

bool is_assign_op(std::string_view op)
{
    static const std::set<std::string_view> kOps{
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>=",
    };
    return kOps.contains(op);
}

const SyntaxTree* written_target(const SyntaxTree& n)
{
    if (n.kind == k::kBinaryOperator && is_assign_op(n.label) && n.children.size() == 2)
        return &n.children[0];
    if (n.kind == k::kUnaryOperator && (n.label == "++" || n.label == "--") && n.children.size() == 1)
        return &n.children[0];
    return nullptr;
}

std::string root_name(const SyntaxTree& target)
{
    const SyntaxTree* t = &target;
    while (t) {
        if (t->kind == k::kDeclRefExpr)
            return t->label;
        if (t->children.empty())
            return {};
        t = &t->children.front();
    }
    return {};
}

void collect_refs(const SyntaxTree& n, std::set<std::string>& out)
{
    n.walk([&](const SyntaxTree& node, int) {
        if (node.kind == k::kDeclRefExpr)
            out.insert(node.label);
    });
}

int count_writes(const SyntaxTree& n, const std::string& name)
{
    int count = 0;
    n.walk([&](const SyntaxTree& node, int) {
        const SyntaxTree* t = written_target(node);
        if (t && t->kind == k::kDeclRefExpr && t->label == name)
            ++count;
    });
    return count;
}

bool is_name_or_literal(const SyntaxTree& e)
{
    if (e.kind == k::kDeclRefExpr || e.kind == k::kIntegerLiteral)
        return true;
    return e.kind == k::kUnaryOperator && e.label == "-" && e.children.size() == 1 &&
           e.children[0].kind == k::kIntegerLiteral;
}

namespace {

bool is_ref(const SyntaxTree& e, const std::string& name)
{
    return e.kind == k::kDeclRefExpr && e.label == name;
}

bool is_one(const SyntaxTree& e)
{
    return e.kind == k::kIntegerLiteral && e.label == "1";
}

}  // namespace

int unit_step(const SyntaxTree& stmt, const std::string& var)
{
    if (stmt.kind == k::kUnaryOperator && stmt.children.size() == 1 && is_ref(stmt.children[0], var)) {
        if (stmt.label == "++")
            return 1;
        if (stmt.label == "--")
            return -1;
    }
    if (stmt.kind == k::kBinaryOperator && stmt.children.size() == 2 && is_ref(stmt.children[0], var)) {
        const SyntaxTree& rhs = stmt.children[1];
        if (stmt.label == "+=" && is_one(rhs))
            return 1;
        if (stmt.label == "-=" && is_one(rhs))
            return -1;
        if (stmt.label == "=" && rhs.kind == k::kBinaryOperator && rhs.children.size() == 2) {
            const SyntaxTree& a = rhs.children[0];
            const SyntaxTree& b = rhs.children[1];
            if (rhs.label == "+" && ((is_ref(a, var) && is_one(b)) || (is_one(a) && is_ref(b, var))))
                return 1;
            if (rhs.label == "-" && is_ref(a, var) && is_one(b))
                return -1;
        }
    }
    return 0;
}

bool LoopShape::recognized() const
{
    return has_init && lo_simple && op == "<" && bound_simple && bound_stable && step == 1;
}

std::optional<std::string> LoopShape::variant() const
{
    if (!bound_stable)
        return std::nullopt;
    std::string b = bound_simple ? bound : "(" + bound + ")";
    if (step == 1 && op == "<")
        return b + " - " + var;
    if (step == 1 && op == "<=")
        return b + " - " + var + " + 1";
    if (step == -1 && op == ">")
        return var + " - " + b;
    if (step == -1 && op == ">=")
        return var + " - " + b + " + 1";
    return std::nullopt;
}

const SyntaxTree& loop_body(const SyntaxTree& loop)
{
    if (loop.kind == k::kDoStmt)
        return loop.children.front();
    return loop.children.back();
}

namespace {

std::optional<std::string> init_value(std::string_view src, const SyntaxTree& stmt, const std::string& var,
                                      const SyntaxTree** value)
{
    if (stmt.kind == k::kBinaryOperator && stmt.label == "=" && stmt.children.size() == 2 &&
        is_ref(stmt.children[0], var)) {
        *value = &stmt.children[1];
        return slice(src, stmt.children[1]);
    }
    if (stmt.kind == k::kDeclStmt) {
        for (const auto& v : stmt.children) {
            if (v.kind == k::kVarDecl && v.label == var && !v.children.empty() &&
                v.children.back().kind != k::kTypeRef) {
                *value = &v.children.back();
                return slice(src, v.children.back());
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<LoopShape> analyze_loop(std::string_view src, const SyntaxTree& loop,
                                      const std::vector<SyntaxTree>* siblings, std::size_t index)
{
    const SyntaxTree* cond = nullptr;
    if (loop.kind == k::kForStmt && loop.children.size() == 4)
        cond = &loop.children[1];
    else if (loop.kind == k::kWhileStmt && loop.children.size() == 2)
        cond = &loop.children[0];
    else if (loop.kind == k::kDoStmt && loop.children.size() == 2)
        cond = &loop.children[1];
    if (!cond || cond->kind != k::kBinaryOperator || cond->children.size() != 2)
        return std::nullopt;
    static const std::set<std::string_view> kCmp{"<", "<=", ">", ">="};
    if (!kCmp.contains(cond->label) || cond->children[0].kind != k::kDeclRefExpr)
        return std::nullopt;

    LoopShape s;
    s.var = cond->children[0].label;
    s.op = cond->label;
    s.bound = slice(src, cond->children[1]);
    s.bound_simple = is_name_or_literal(cond->children[1]);

    const SyntaxTree& body = loop_body(loop);
    if (loop.kind == k::kForStmt) {
        s.step = unit_step(loop.children[2], s.var);
        if (count_writes(body, s.var) != 0)
            s.step = 0;
        const SyntaxTree* value = nullptr;
        if (auto lo = init_value(src, loop.children[0], s.var, &value)) {
            s.lo = *lo;
            s.has_init = true;
            s.lo_simple = is_name_or_literal(*value);
        }
    } else {
        if (count_writes(body, s.var) == 1) {
            if (body.kind == k::kCompoundStmt) {
                for (const auto& st : body.children)
                    if (int step = unit_step(st, s.var))
                        s.step = step;
            } else {
                s.step = unit_step(body, s.var);
            }
        }
        if (siblings) {
            for (std::size_t j = index; j-- > 0;) {
                const SyntaxTree& prev = (*siblings)[j];
                const SyntaxTree* value = nullptr;
                if (auto lo = init_value(src, prev, s.var, &value)) {
                    s.lo = *lo;
                    s.has_init = true;
                    s.lo_simple = is_name_or_literal(*value);
                    break;
                }
                if (count_writes(prev, s.var) > 0)
                    break;
            }
        }
    }

    std::set<std::string> bound_refs;
    collect_refs(cond->children[1], bound_refs);
    s.bound_stable = bound_refs.count(s.var) == 0;
    for (const auto& name : bound_refs) {
        if (count_writes(body, name) > 0)
            s.bound_stable = false;
    }
    bool has_call = false;
    cond->children[1].walk([&](const SyntaxTree& n, int) {
        if (n.kind == k::kCallExpr)
            has_call = true;
    });
    if (has_call)
        s.bound_stable = false;
    return s;
}

const SyntaxTree* trailing_return(const SyntaxTree& stmt)
{
    if (stmt.kind == k::kReturnStmt)
        return stmt.children.empty() ? nullptr : &stmt.children.front();
    if (stmt.kind == k::kCompoundStmt && !stmt.children.empty())
        return trailing_return(stmt.children.back());
    return nullptr;
}

std::string apply_insertions(std::string_view src, std::vector<Insertion> ins)
{
    std::stable_sort(ins.begin(), ins.end(), [](const Insertion& a, const Insertion& b) {
        return std::pair(a.before_line, a.order) < std::pair(b.before_line, b.order);
    });
    std::string eol = src.find("\r\n") != std::string_view::npos ? "\r\n" : "\n";
    std::string out;
    out.reserve(src.size() + ins.size() * 64);
    std::size_t pos = 0;
    int line = 1;
    std::size_t next = 0;
    auto flush = [&](int before) {
        while (next < ins.size() && ins[next].before_line == before) {
            for (const auto& l : ins[next].lines) {
                out += l;
                out += eol;
            }
            ++next;
        }
    };
    while (pos < src.size()) {
        flush(line);
        std::size_t e = src.find('\n', pos);
        std::size_t stop = e == std::string_view::npos ? src.size() : e + 1;
        out.append(src.substr(pos, stop - pos));
        pos = stop;
        ++line;
    }
    if (next < ins.size() && !out.empty() && out.back() != '\n')
        out += eol;
    while (next < ins.size()) {
        for (const auto& l : ins[next].lines) {
            out += l;
            out += eol;
        }
        ++next;
    }
    return out;
}

}  // namespace detail

}  // namespace artgraph::specgen
