#include "nnfc/formula.hpp"

#include <cassert>
#include <cctype>
#include <functional>
#include <map>

namespace nnfc {

Var Var::with_sub(std::uint32_t s) const
{
    Var v = *this;
    v.subs.push_back(s);
    return v;
}

std::string Var::str() const
{
    std::string out(1, letter);
    if (base >= 0)
        out += std::to_string(base);
    for (auto s : subs) {
        out += '_';
        out += std::to_string(s);
    }
    return out;
}

std::optional<Var> parse_var(const std::string& text)
{
    if (text.empty() || text[0] < 'a' || text[0] > 'z')
        return std::nullopt;
    Var v;
    v.letter = text[0];
    std::size_t i = 1;
    auto read_number = [&](std::uint64_t& out) {
        std::size_t start = i;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (out > 1000000000)
                return false;
            ++i;
        }
        return i > start;
    };
    std::uint64_t n = 0;
    v.base = read_number(n) ? static_cast<int>(n) : -1;
    while (i < text.size()) {
        if (text[i] != '_' || v.base < 0)
            return std::nullopt;
        ++i;
        if (!read_number(n) || n == 0)
            return std::nullopt;
        v.subs.push_back(static_cast<std::uint32_t>(n));
    }
    return v;
}

std::string path_str(const Path& p)
{
    if (p.empty())
        return "root";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += '.';
        out += std::to_string(p[i]);
    }
    return out;
}

std::optional<Path> parse_path(const std::string& text)
{
    if (text == "root")
        return Path{};
    Path p;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '0' && text[i] != '1')
            return std::nullopt;
        p.push_back(text[i] - '0');
        ++i;
        if (i < text.size()) {
            if (text[i] != '.' || i + 1 == text.size())
                return std::nullopt;
            ++i;
        }
    }
    if (p.empty())
        return std::nullopt;
    return p;
}

// ---------------------------------------------------------------------------

Formula Formula::atom(std::string pred, std::vector<Var> args)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Atom;
    n->pred = std::move(pred);
    n->args = std::move(args);
    return Formula(std::move(n));
}

Formula Formula::neg(Formula f)
{
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Not;
    n->lhs = std::move(f);
    return Formula(std::move(n));
}

Formula Formula::binary(NodeKind k, Formula l, Formula r)
{
    assert(k == NodeKind::And || k == NodeKind::Or);
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) { return binary(NodeKind::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return binary(NodeKind::Or, std::move(l), std::move(r)); }

Formula Formula::quant(NodeKind k, Var v, Formula body)
{
    assert(k == NodeKind::Forall || k == NodeKind::Exists);
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->var = std::move(v);
    n->lhs = std::move(body);
    return Formula(std::move(n));
}

Formula Formula::forall(Var v, Formula body) { return quant(NodeKind::Forall, std::move(v), std::move(body)); }
Formula Formula::exists(Var v, Formula body) { return quant(NodeKind::Exists, std::move(v), std::move(body)); }

Formula Formula::sat()
{
    static const Formula marker = [] {
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Sat;
        return Formula(std::move(n));
    }();
    return marker;
}

NodeKind Formula::kind() const
{
    if (!node_)
        throw std::logic_error("empty formula");
    return node_->kind;
}

bool Formula::is_literal() const
{
    return is_atom() || (is_not() && left().is_atom());
}

const std::string& Formula::pred() const
{
    if (is_not())
        return left().pred();
    return node_->pred;
}

const std::vector<Var>& Formula::args() const
{
    if (is_not())
        return left().args();
    return node_->args;
}

const Var& Formula::var() const { return node_->var; }
const Formula& Formula::left() const { return node_->lhs; }
const Formula& Formula::right() const { return node_->rhs; }

int Formula::num_children() const
{
    switch (kind()) {
    case NodeKind::Atom:
    case NodeKind::Sat:
        return 0;
    case NodeKind::Not:
    case NodeKind::Forall:
    case NodeKind::Exists:
        return 1;
    default:
        return 2;
    }
}

bool Formula::operator==(const Formula& o) const
{
    if (node_ == o.node_)
        return true;
    if (!node_ || !o.node_)
        return false;
    const Node& a = *node_;
    const Node& b = *o.node_;
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case NodeKind::Atom:
        return a.pred == b.pred && a.args == b.args;
    case NodeKind::Sat:
        return true;
    case NodeKind::Not:
        return a.lhs == b.lhs;
    case NodeKind::Forall:
    case NodeKind::Exists:
        return a.var == b.var && a.lhs == b.lhs;
    default:
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
}

std::string QuantifiedVar::str() const
{
    return std::string(kind == NodeKind::Forall ? "A " : "E ") + var.str();
}

std::string LiteralOccurrence::str() const
{
    std::string out = polarity == Polarity::Neg ? "~" : "";
    out += pred + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i)
            out += ',';
        out += args[i].str();
    }
    return out + ")";
}

// ---------------------------------------------------------------------------

const Formula& subformula_at(const Formula& f, const Path& p)
{
    const Formula* cur = &f;
    for (int step : p) {
        if (step < 0 || step >= cur->num_children())
            throw std::out_of_range("path " + path_str(p) + " does not resolve");
        cur = &cur->child(step);
    }
    return *cur;
}

bool has_path(const Formula& f, const Path& p)
{
    const Formula* cur = &f;
    for (int step : p) {
        if (step < 0 || step >= cur->num_children())
            return false;
        cur = &cur->child(step);
    }
    return true;
}

static Formula replace_rec(const Formula& f, const Path& p, std::size_t i, const Formula& repl)
{
    if (i == p.size())
        return repl;
    int step = p[i];
    if (step < 0 || step >= f.num_children())
        throw std::out_of_range("path " + path_str(p) + " does not resolve");
    Formula child = replace_rec(f.child(step), p, i + 1, repl);
    switch (f.kind()) {
    case NodeKind::Not:
        return Formula::neg(child);
    case NodeKind::Forall:
    case NodeKind::Exists:
        return Formula::quant(f.kind(), f.var(), child);
    default:
        return step == 0 ? Formula::binary(f.kind(), child, f.right())
                         : Formula::binary(f.kind(), f.left(), child);
    }
}

Formula replace_at(const Formula& f, const Path& p, const Formula& replacement)
{
    return replace_rec(f, p, 0, replacement);
}

static void collect_literals(const Formula& f, Path& path, std::vector<LiteralOccurrence>& out)
{
    if (f.is_atom() || (f.is_not() && f.left().is_atom())) {
        out.push_back({path, f.is_not() ? Polarity::Neg : Polarity::Pos, f.pred(), f.args()});
        return;
    }
    for (int i = 0; i < f.num_children(); ++i) {
        path.push_back(i);
        collect_literals(f.child(i), path, out);
        path.pop_back();
    }
}

std::vector<LiteralOccurrence> literals(const Formula& f)
{
    std::vector<LiteralOccurrence> out;
    Path path;
    collect_literals(f, path, out);
    return out;
}

static void collect_free(const Formula& f, std::multiset<Var>& bound, std::set<Var>& out)
{
    switch (f.kind()) {
    case NodeKind::Atom:
        for (const auto& v : f.args())
            if (!bound.count(v))
                out.insert(v);
        return;
    case NodeKind::Sat:
        return;
    case NodeKind::Forall:
    case NodeKind::Exists: {
        auto it = bound.insert(f.var());
        collect_free(f.body(), bound, out);
        bound.erase(it);
        return;
    }
    default:
        for (int i = 0; i < f.num_children(); ++i)
            collect_free(f.child(i), bound, out);
    }
}

std::set<Var> free_vars(const Formula& f)
{
    std::multiset<Var> bound;
    std::set<Var> out;
    collect_free(f, bound, out);
    return out;
}

bool occurs_free(const Formula& f, const Var& v) { return free_vars(f).count(v) > 0; }

static void collect_all(const Formula& f, std::set<Var>& out)
{
    if (f.is_atom()) {
        out.insert(f.args().begin(), f.args().end());
        return;
    }
    if (f.is_quant())
        out.insert(f.var());
    for (int i = 0; i < f.num_children(); ++i)
        collect_all(f.child(i), out);
}

std::set<Var> all_vars(const Formula& f)
{
    std::set<Var> out;
    collect_all(f, out);
    return out;
}

static void collect_binders(const Formula& f, std::vector<Var>& out)
{
    if (f.is_quant())
        out.push_back(f.var());
    for (int i = 0; i < f.num_children(); ++i)
        collect_binders(f.child(i), out);
}

std::vector<Var> binders(const Formula& f)
{
    std::vector<Var> out;
    collect_binders(f, out);
    return out;
}

static void collect_preds(const Formula& f, std::set<std::string>& out)
{
    if (f.is_atom()) {
        out.insert(f.pred());
        return;
    }
    for (int i = 0; i < f.num_children(); ++i)
        collect_preds(f.child(i), out);
}

std::set<std::string> predicates(const Formula& f)
{
    std::set<std::string> out;
    collect_preds(f, out);
    return out;
}

std::size_t quantifier_count(const Formula& f) { return binders(f).size(); }

Formula substitute(const Formula& f, const Var& from, const Var& to)
{
    switch (f.kind()) {
    case NodeKind::Atom: {
        bool hit = false;
        std::vector<Var> args = f.args();
        for (auto& a : args)
            if (a == from) {
                a = to;
                hit = true;
            }
        return hit ? Formula::atom(f.pred(), std::move(args)) : f;
    }
    case NodeKind::Sat:
        return f;
    case NodeKind::Not:
        return Formula::neg(substitute(f.left(), from, to));
    case NodeKind::Forall:
    case NodeKind::Exists:
        if (f.var() == from)
            return f;
        return Formula::quant(f.kind(), f.var(), substitute(f.body(), from, to));
    default:
        return Formula::binary(f.kind(), substitute(f.left(), from, to), substitute(f.right(), from, to));
    }
}

bool is_nnf(const Formula& f)
{
    if (f.is_not())
        return f.left().is_atom();
    for (int i = 0; i < f.num_children(); ++i)
        if (!is_nnf(f.child(i)))
            return false;
    return true;
}

static bool has_kind(const Formula& f, NodeKind k)
{
    if (f.kind() == k)
        return true;
    for (int i = 0; i < f.num_children(); ++i)
        if (has_kind(f.child(i), k))
            return true;
    return false;
}

bool is_wedge_nnf(const Formula& f) { return is_nnf(f) && !has_kind(f, NodeKind::Or); }
bool contains_sat(const Formula& f) { return has_kind(f, NodeKind::Sat); }
bool contains_forall(const Formula& f) { return has_kind(f, NodeKind::Forall); }

bool is_rectified(const Formula& f)
{
    auto bs = binders(f);
    std::set<Var> seen;
    for (const auto& b : bs)
        if (!seen.insert(b).second)
            return false;
    return true;
}

bool is_closed(const Formula& f) { return free_vars(f).empty(); }

Formula and_all(const std::vector<Formula>& fs)
{
    if (fs.empty())
        throw std::invalid_argument("and_all of nothing");
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i)
        acc = Formula::conj(acc, fs[i]);
    return acc;
}

Formula or_all(const std::vector<Formula>& fs)
{
    if (fs.empty())
        throw std::invalid_argument("or_all of nothing");
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i)
        acc = Formula::disj(acc, fs[i]);
    return acc;
}

} // namespace nnfc
