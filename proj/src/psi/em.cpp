#include "nnfc/psi.hpp"

#include <algorithm>

namespace nnfc {

EmGuard em_applicable(const Formula& f, const Path& position)
{
    if (!has_path(f, position))
        throw std::invalid_argument("position " + path_str(position) + " does not exist");
    const Formula& node = subformula_at(f, position);
    if (!node.is_exists() || !node.body().is_and())
        throw std::invalid_argument("position does not hold E v (A & B)");
    const Var& mu = node.var();
    ConnectedPair p = pair_of(f);

    for (std::size_t n = 0; n < p.l1.args.size(); ++n)
        if (p.l1.args[n] == mu && p.l2.args[n] == mu)
            return EmGuard::DirectCase;

    AlignedPairs aligned = xy_yx_pairs(p);
    auto inside_mu = [&](const Var& x) {
        auto bp = binder_path(f, x);
        return bp && bp->size() > position.size() && std::equal(position.begin(), position.end(), bp->begin());
    };
    for (const XXList& a : xx_lists(p)) {
        bool all_inside = std::all_of(a.begin(), a.end(), inside_mu);
        if (!all_inside)
            continue;
        for (const auto& xy : aligned.xy) {
            if (xy.yvar != mu || !a.count(xy.xvar))
                continue;
            for (const auto& yx : aligned.yx)
                if (yx.yvar == mu && a.count(yx.xvar) && yx.xvar != xy.xvar)
                    return EmGuard::IndirectCase;
        }
    }
    return EmGuard::Yes;
}

namespace {

void exists_over_and(const Formula& f, Path& path, std::vector<Path>& out)
{
    if (f.is_exists() && f.body().is_and())
        out.push_back(path);
    for (int i = 0; i < f.num_children(); ++i) {
        path.push_back(i);
        exists_over_and(f.child(i), path, out);
        path.pop_back();
    }
}

/** Candidates outermost first, then leftmost. */
std::vector<Path> em_candidates(const Formula& f)
{
    std::vector<Path> out;
    Path path;
    exists_over_and(f, path, out);
    std::stable_sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.size() < b.size(); });
    return out;
}

} // namespace

EmStats em_optimize(Derivation& d)
{
    EmStats stats;
    while (true) {
        stats.pn_steps += minimize_scopes(d);
        bool applied = false;
        for (const Path& pos : em_candidates(d.current())) {
            if (em_applicable(d.current(), pos) != EmGuard::Yes)
                continue;
            stats.multiplied.push_back(subformula_at(d.current(), pos).var());
            d.apply(RuleId::ExistsM, pos);
            applied = true;
            break;
        }
        if (!applied)
            return stats;
    }
}

Formula em_optimize(const Formula& psi)
{
    Derivation d(psi);
    em_optimize(d);
    return d.current();
}

namespace {

/** Removes the literal of the given polarity together with binders that become vacuous. */
std::optional<Formula> drop_literal(const Formula& f, Polarity drop)
{
    if (f.is_literal()) {
        Polarity pol = f.is_not() ? Polarity::Neg : Polarity::Pos;
        if (pol == drop)
            return std::nullopt;
        return f;
    }
    if (f.is_quant()) {
        auto body = drop_literal(f.body(), drop);
        if (!body)
            return std::nullopt;
        if (!occurs_free(*body, f.var()))
            return body;
        return Formula::quant(f.kind(), f.var(), *body);
    }
    if (f.is_binary()) {
        auto l = drop_literal(f.left(), drop);
        auto r = drop_literal(f.right(), drop);
        if (!l)
            return r;
        if (!r)
            return l;
        return Formula::binary(f.kind(), *l, *r);
    }
    return f;
}

} // namespace

Formula em_free_route(const Formula& psi)
{
    Derivation probe(psi);
    EmStats stats = em_optimize(probe);

    Derivation d(psi);
    minimize_scopes(d);
    if (stats.multiplied.empty())
        return d.current();

    const Formula& prime = d.current();
    std::optional<Path> outer;
    for (const Var& mu : stats.multiplied) {
        auto bp = binder_path(prime, mu);
        if (!bp)
            continue;
        if (!outer || bp->size() < outer->size() || (bp->size() == outer->size() && *bp < *outer))
            outer = bp;
    }
    if (!outer)
        throw std::logic_error("multiplied existential not found in scope-minimized formula");

    d.apply(RuleId::AndI, *outer);
    const Formula& doubled = subformula_at(d.current(), *outer);
    auto left = drop_literal(doubled.left(), Polarity::Neg);
    auto right = drop_literal(doubled.right(), Polarity::Pos);
    if (!left || !right)
        throw std::logic_error("conjunct multiplication lost a literal");
    Formula separated = replace_at(d.current(), *outer, Formula::conj(*left, *right));
    return minimize_scopes(separated);
}

} // namespace nnfc
