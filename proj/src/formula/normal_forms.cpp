#include "nnfc/formula.hpp"

#include <algorithm>
#include <map>

namespace nnfc {

static Formula nnf(const Formula& f, bool negated)
{
    switch (f.kind()) {
    case NodeKind::Atom:
        return negated ? Formula::neg(f) : f;
    case NodeKind::Sat:
        return f;
    case NodeKind::Not:
        return nnf(f.left(), !negated);
    case NodeKind::And:
    case NodeKind::Or: {
        NodeKind k = f.kind();
        if (negated)
            k = k == NodeKind::And ? NodeKind::Or : NodeKind::And;
        return Formula::binary(k, nnf(f.left(), negated), nnf(f.right(), negated));
    }
    case NodeKind::Forall:
    case NodeKind::Exists: {
        NodeKind k = f.kind();
        if (negated)
            k = k == NodeKind::Forall ? NodeKind::Exists : NodeKind::Forall;
        return Formula::quant(k, f.var(), nnf(f.body(), negated));
    }
    }
    return f;
}

Formula to_nnf(const Formula& f) { return nnf(f, false); }

// ---------------------------------------------------------------------------

static bool canonically_named(const Formula& f)
{
    if (!is_rectified(f) || !is_closed(f))
        return false;
    bool ok = true;
    std::vector<Formula> stack{f};
    while (!stack.empty() && ok) {
        Formula g = stack.back();
        stack.pop_back();
        if (g.is_forall() && !(g.var().is_universal() && g.var().is_canonical()))
            ok = false;
        if (g.is_exists() && !(g.var().is_existential() && g.var().is_canonical()))
            ok = false;
        for (int i = 0; i < g.num_children(); ++i)
            stack.push_back(g.child(i));
    }
    return ok;
}

namespace {

struct Renamer {
    int next_x = 1;
    int next_y = 1;
    std::vector<std::pair<Var, Var>> env; // innermost last

    Var lookup(const Var& v) const
    {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->first == v)
                return it->second;
        return v;
    }

    Formula run(const Formula& f)
    {
        switch (f.kind()) {
        case NodeKind::Atom: {
            std::vector<Var> args;
            args.reserve(f.args().size());
            for (const auto& a : f.args())
                args.push_back(lookup(a));
            return Formula::atom(f.pred(), std::move(args));
        }
        case NodeKind::Sat:
            return f;
        case NodeKind::Not:
            return Formula::neg(run(f.left()));
        case NodeKind::Forall:
        case NodeKind::Exists: {
            Var fresh = f.is_forall() ? Var::x(next_x++) : Var::y(next_y++);
            env.emplace_back(f.var(), fresh);
            Formula body = run(f.body());
            env.pop_back();
            return Formula::quant(f.kind(), fresh, body);
        }
        default: {
            Formula l = run(f.left());
            Formula r = run(f.right());
            return Formula::binary(f.kind(), l, r);
        }
        }
    }
};

} // namespace

Formula rectify(const Formula& f)
{
    if (canonically_named(f))
        return f;
    Renamer r;
    return r.run(f);
}

// ---------------------------------------------------------------------------

namespace {

struct Subscripter {
    std::map<Var, int> total;
    std::map<Var, std::uint32_t> seen;
    std::vector<std::pair<Var, Var>> env;

    Var lookup(const Var& v) const
    {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (it->first == v)
                return it->second;
        return v;
    }

    Formula run(const Formula& f)
    {
        switch (f.kind()) {
        case NodeKind::Atom: {
            std::vector<Var> args;
            for (const auto& a : f.args())
                args.push_back(lookup(a));
            return Formula::atom(f.pred(), std::move(args));
        }
        case NodeKind::Sat:
            return f;
        case NodeKind::Not:
            return Formula::neg(run(f.left()));
        case NodeKind::Forall:
        case NodeKind::Exists: {
            Var nv = f.var();
            if (total[f.var()] > 1)
                nv = f.var().with_sub(++seen[f.var()]);
            env.emplace_back(f.var(), nv);
            Formula body = run(f.body());
            env.pop_back();
            return Formula::quant(f.kind(), nv, body);
        }
        default: {
            Formula l = run(f.left());
            Formula r = run(f.right());
            return Formula::binary(f.kind(), l, r);
        }
        }
    }
};

} // namespace

Formula max_subscript(const Formula& f)
{
    Subscripter s;
    for (const auto& b : binders(f))
        ++s.total[b];
    bool dup = false;
    for (const auto& [v, n] : s.total)
        dup = dup || n > 1;
    if (!dup)
        return f;
    return s.run(f);
}

// ---------------------------------------------------------------------------

static Formula quantify_if_used(NodeKind k, const Var& v, const Formula& body)
{
    if (!occurs_free(body, v))
        return body;
    return Formula::quant(k, v, body);
}

static std::vector<Formula> top_disjuncts(const Formula& f)
{
    switch (f.kind()) {
    case NodeKind::Or: {
        auto a = top_disjuncts(f.left());
        auto b = top_disjuncts(f.right());
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    case NodeKind::And: {
        auto a = top_disjuncts(f.left());
        auto b = top_disjuncts(f.right());
        if (a.size() == 1 && b.size() == 1)
            return {Formula::conj(a[0], b[0])};
        std::vector<Formula> out;
        for (const auto& x : a)
            for (const auto& y : b)
                out.push_back(Formula::conj(x, y));
        return out;
    }
    case NodeKind::Exists: {
        auto ds = top_disjuncts(f.body());
        if (ds.size() == 1)
            return {Formula::exists(f.var(), ds[0])};
        std::vector<Formula> out;
        for (const auto& d : ds)
            out.push_back(quantify_if_used(NodeKind::Exists, f.var(), d));
        return out;
    }
    case NodeKind::Forall: {
        auto ds = top_disjuncts(f.body());
        if (ds.size() == 1)
            return {Formula::forall(f.var(), ds[0])};
        std::vector<Formula> free_of_v, with_v;
        for (const auto& d : ds)
            (occurs_free(d, f.var()) ? with_v : free_of_v).push_back(d);
        if (free_of_v.empty())
            return {f};
        if (!with_v.empty())
            free_of_v.push_back(Formula::forall(f.var(), or_all(with_v)));
        return free_of_v;
    }
    default:
        return {f};
    }
}

std::vector<Formula> to_foldnf(const Formula& f)
{
    auto ds = top_disjuncts(f);
    Formula joined = rectify(or_all(ds));
    // or_all nests to the left; unwind the left spine
    std::vector<Formula> out;
    Formula cur = joined;
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
        out.push_back(cur.right());
        cur = cur.left();
    }
    out.push_back(cur);
    std::reverse(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool only_universals(const std::vector<QuantifiedVar>& q, std::size_t from)
{
    for (std::size_t i = from; i < q.size(); ++i)
        if (q[i].kind == NodeKind::Exists)
            return false;
    return true;
}

std::vector<QuantifiedVar> merge_prefixes(const std::vector<QuantifiedVar>& a, const std::vector<QuantifiedVar>& b)
{
    std::vector<QuantifiedVar> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        bool a_has = i < a.size();
        bool b_has = j < b.size();
        if (a_has && a[i].kind == NodeKind::Exists)
            out.push_back(a[i++]);
        else if (b_has && b[j].kind == NodeKind::Exists)
            out.push_back(b[j++]);
        else if (b_has && only_universals(a, i))
            out.push_back(b[j++]);
        else
            out.push_back(a[i++]);
    }
    return out;
}

struct PrenexParts {
    std::vector<QuantifiedVar> prefix;
    std::vector<std::vector<LiteralOccurrence>> dnf;
};

PrenexParts dnf_rec(const Formula& f, Path& path)
{
    PrenexParts out;
    if (f.is_literal()) {
        out.dnf.push_back({{path, f.is_not() ? Polarity::Neg : Polarity::Pos, f.pred(), f.args()}});
        return out;
    }
    switch (f.kind()) {
    case NodeKind::Sat:
        out.dnf.push_back({});
        return out;
    case NodeKind::Forall:
    case NodeKind::Exists: {
        path.push_back(0);
        out = dnf_rec(f.body(), path);
        path.pop_back();
        out.prefix.insert(out.prefix.begin(), QuantifiedVar{f.kind(), f.var()});
        return out;
    }
    case NodeKind::And:
    case NodeKind::Or: {
        path.push_back(0);
        PrenexParts a = dnf_rec(f.left(), path);
        path.back() = 1;
        PrenexParts b = dnf_rec(f.right(), path);
        path.pop_back();
        out.prefix = merge_prefixes(a.prefix, b.prefix);
        if (f.is_or()) {
            out.dnf = std::move(a.dnf);
            out.dnf.insert(out.dnf.end(), b.dnf.begin(), b.dnf.end());
        } else {
            for (const auto& x : a.dnf)
                for (const auto& y : b.dnf) {
                    auto c = x;
                    c.insert(c.end(), y.begin(), y.end());
                    out.dnf.push_back(std::move(c));
                }
        }
        return out;
    }
    default:
        throw std::invalid_argument("dnf_matrix expects an NNF");
    }
}

} // namespace

DnfMatrix dnf_matrix(const Formula& f)
{
    Path path;
    PrenexParts p = dnf_rec(f, path);
    return {std::move(p.prefix), std::move(p.dnf)};
}

// ---------------------------------------------------------------------------

namespace {

void flatten(const Formula& f, NodeKind k, std::vector<Formula>& out)
{
    if (f.kind() == k) {
        flatten(f.left(), k, out);
        flatten(f.right(), k, out);
    } else {
        out.push_back(f);
    }
}

std::string ac_rec(const Formula& f)
{
    switch (f.kind()) {
    case NodeKind::And:
    case NodeKind::Or: {
        std::vector<Formula> parts;
        flatten(f, f.kind(), parts);
        std::vector<std::string> ss;
        for (const auto& p : parts)
            ss.push_back(ac_rec(p));
        std::sort(ss.begin(), ss.end());
        std::string out = f.is_and() ? "&(" : "|(";
        for (std::size_t i = 0; i < ss.size(); ++i)
            out += (i ? "," : "") + ss[i];
        return out + ")";
    }
    case NodeKind::Forall:
    case NodeKind::Exists: {
        std::vector<std::string> vs;
        Formula cur = f;
        while (cur.kind() == f.kind()) {
            vs.push_back(cur.var().str());
            cur = cur.body();
        }
        std::sort(vs.begin(), vs.end());
        std::string out = f.is_forall() ? "A[" : "E[";
        for (std::size_t i = 0; i < vs.size(); ++i)
            out += (i ? "," : "") + vs[i];
        return out + "]" + ac_rec(cur);
    }
    case NodeKind::Not:
        return "~" + ac_rec(f.left());
    default:
        return f.str();
    }
}

std::string alpha_rec(const Formula& f, std::vector<Var>& env)
{
    switch (f.kind()) {
    case NodeKind::Atom: {
        std::string out = f.pred() + "(";
        for (std::size_t i = 0; i < f.args().size(); ++i) {
            const Var& a = f.args()[i];
            std::string name = a.str();
            for (std::size_t k = env.size(); k-- > 0;)
                if (env[k] == a) {
                    name = "#" + std::to_string(env.size() - 1 - k);
                    break;
                }
            out += (i ? "," : "") + name;
        }
        return out + ")";
    }
    case NodeKind::Sat:
        return "sat";
    case NodeKind::Not:
        return "~" + alpha_rec(f.left(), env);
    case NodeKind::Forall:
    case NodeKind::Exists: {
        env.push_back(f.var());
        std::string out = (f.is_forall() ? "A." : "E.") + alpha_rec(f.body(), env);
        env.pop_back();
        return out;
    }
    default: {
        std::vector<Formula> parts;
        flatten(f, f.kind(), parts);
        std::vector<std::string> ss;
        for (const auto& p : parts)
            ss.push_back(alpha_rec(p, env));
        std::sort(ss.begin(), ss.end());
        std::string out = f.is_and() ? "&(" : "|(";
        for (std::size_t i = 0; i < ss.size(); ++i)
            out += (i ? "," : "") + ss[i];
        return out + ")";
    }
    }
}

} // namespace

std::string ac_canonical(const Formula& f) { return ac_rec(f); }

bool equal_modulo_ac(const Formula& a, const Formula& b) { return a == b || ac_rec(a) == ac_rec(b); }

bool alpha_equal(const Formula& a, const Formula& b)
{
    std::vector<Var> e1, e2;
    return alpha_rec(a, e1) == alpha_rec(b, e2);
}

} // namespace nnfc
