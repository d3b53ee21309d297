#include "nnfc/psi.hpp"

#include <algorithm>
#include <map>

namespace nnfc {

bool literals_connected(const LiteralOccurrence& pos, const LiteralOccurrence& neg)
{
    if (pos.polarity != Polarity::Pos || neg.polarity != Polarity::Neg)
        return false;
    if (pos.pred != neg.pred || pos.args.size() != neg.args.size())
        return false;
    for (std::size_t n = 0; n < pos.args.size(); ++n) {
        const Var& a = pos.args[n];
        const Var& b = neg.args[n];
        if (a.is_existential() && b.is_existential() && a != b)
            return false;
    }
    return true;
}

std::vector<ConnectedPair> connected_pairs(const Formula& f)
{
    auto lits = literals(f);
    std::vector<ConnectedPair> out;
    for (std::size_t i = 0; i < lits.size(); ++i)
        for (std::size_t j = i + 1; j < lits.size(); ++j) {
            const auto& a = lits[i];
            const auto& b = lits[j];
            if (a.polarity == Polarity::Pos && literals_connected(a, b))
                out.push_back({a, b, f});
            else if (b.polarity == Polarity::Pos && literals_connected(b, a))
                out.push_back({b, a, f});
        }
    return out;
}

namespace {

/** Keeps the quantifiers along path[from, to) that bind one of vars; returns them outermost first. */
std::vector<const Formula*> kept_binders(const Formula& start, const Path& path, std::size_t from, std::size_t to,
                                         const std::set<Var>& vars, const Formula** end)
{
    std::vector<const Formula*> kept;
    const Formula* node = &start;
    for (std::size_t d = from; d < to; ++d) {
        if (node->is_quant() && vars.count(node->var()))
            kept.push_back(node);
        node = &node->child(path[d]);
    }
    *end = node;
    return kept;
}

Formula wrap(const std::vector<const Formula*>& qs, Formula inner)
{
    for (auto it = qs.rbegin(); it != qs.rend(); ++it)
        inner = Formula::quant((*it)->kind(), (*it)->var(), inner);
    return inner;
}

} // namespace

Formula extract_subformula(const Formula& f, const ConnectedPair& p)
{
    const Path& a = p.l1.path;
    const Path& b = p.l2.path;
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k])
        ++k;
    if (k == a.size() || k == b.size())
        throw std::invalid_argument("literal occurrences are nested");

    std::set<Var> vars(p.l1.args.begin(), p.l1.args.end());
    vars.insert(p.l2.args.begin(), p.l2.args.end());

    const Formula* lca = nullptr;
    auto outer = kept_binders(f, a, 0, k, vars, &lca);
    if (!lca->is_binary())
        throw std::invalid_argument("literals are not joined by a connective");

    const Path& left_path = a[k] == 0 ? a : b;
    const Path& right_path = a[k] == 0 ? b : a;
    const Formula* left_lit = nullptr;
    const Formula* right_lit = nullptr;
    auto left_q = kept_binders(lca->left(), left_path, k + 1, left_path.size(), vars, &left_lit);
    auto right_q = kept_binders(lca->right(), right_path, k + 1, right_path.size(), vars, &right_lit);

    Formula joined = Formula::conj(wrap(left_q, *left_lit), wrap(right_q, *right_lit));
    return wrap(outer, joined);
}

ConnectedPair pair_of(const Formula& psi)
{
    auto lits = literals(psi);
    if (lits.size() != 2)
        throw std::invalid_argument("expected exactly two literals in " + psi.str());
    if (lits[0].polarity == Polarity::Pos && lits[1].polarity == Polarity::Neg)
        return {lits[0], lits[1], psi};
    if (lits[1].polarity == Polarity::Pos && lits[0].polarity == Polarity::Neg)
        return {lits[1], lits[0], psi};
    throw std::invalid_argument("expected one positive and one negative literal in " + psi.str());
}

static bool find_binder(const Formula& f, const Var& v, Path& path)
{
    if (f.is_quant() && f.var() == v)
        return true;
    for (int i = 0; i < f.num_children(); ++i) {
        path.push_back(i);
        if (find_binder(f.child(i), v, path))
            return true;
        path.pop_back();
    }
    return false;
}

std::optional<Path> binder_path(const Formula& f, const Var& v)
{
    Path p;
    if (find_binder(f, v, p))
        return p;
    return std::nullopt;
}

bool in_scope_of(const Formula& f, const Var& inner, const Var& outer)
{
    auto pi = binder_path(f, inner);
    auto po = binder_path(f, outer);
    if (!pi || !po || po->size() >= pi->size())
        return false;
    return std::equal(po->begin(), po->end(), pi->begin());
}

std::vector<XXList> xx_lists(const ConnectedPair& p)
{
    std::map<Var, Var> parent;
    auto find = [&](Var v) {
        while (parent.at(v) != v)
            v = parent.at(v);
        return v;
    };
    for (std::size_t n = 0; n < p.l1.args.size(); ++n) {
        const Var& a = p.l1.args[n];
        const Var& b = p.l2.args[n];
        if (!a.is_universal() || !b.is_universal())
            continue;
        parent.try_emplace(a, a);
        parent.try_emplace(b, b);
        Var ra = find(a), rb = find(b);
        if (ra != rb)
            parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<Var, XXList> groups;
    for (const auto& [v, _] : parent)
        groups[find(v)].insert(v);
    std::vector<XXList> out;
    for (auto& [_, g] : groups)
        out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const XXList& a, const XXList& b) { return *a.begin() < *b.begin(); });
    return out;
}

AlignedPairs xy_yx_pairs(const ConnectedPair& p)
{
    AlignedPairs out;
    for (std::size_t n = 0; n < p.l1.args.size(); ++n) {
        const Var& a = p.l1.args[n];
        const Var& b = p.l2.args[n];
        if (a.is_universal() && b.is_existential()) {
            XYPair xy{a, b};
            if (std::find(out.xy.begin(), out.xy.end(), xy) == out.xy.end())
                out.xy.push_back(xy);
        } else if (a.is_existential() && b.is_universal()) {
            YXPair yx{a, b};
            if (std::find(out.yx.begin(), out.yx.end(), yx) == out.yx.end())
                out.yx.push_back(yx);
        }
    }
    return out;
}

} // namespace nnfc
