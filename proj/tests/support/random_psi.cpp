#include "support/random_psi.hpp"

#include "nnfc/psi.hpp"

#include <set>

namespace nnfc::testing {

namespace {

struct Slot {
    NodeKind kind;
    Var var;
};

Formula wrap(const std::vector<Slot>& qs, Formula inner)
{
    for (auto it = qs.rbegin(); it != qs.rend(); ++it)
        inner = Formula::quant(it->kind, it->var, inner);
    return inner;
}

std::vector<Slot> only_used(const std::vector<Slot>& qs, const std::set<Var>& used)
{
    std::vector<Slot> out;
    for (const auto& q : qs)
        if (used.count(q.var))
            out.push_back(q);
    return out;
}

} // namespace

Formula random_psi(std::mt19937_64& rng, const RandomPsiOptions& opts)
{
    std::uniform_int_distribution<int> qdist(0, opts.max_quantifiers);
    std::uniform_int_distribution<int> adist(1, opts.max_arity);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> block(0, 2);

    while (true) {
        int q = qdist(rng);
        int arity = adist(rng);
        std::vector<Slot> blocks[3]; // outer, left, right
        int xs = 0, ys = 0;
        for (int i = 0; i < q; ++i) {
            bool universal = coin(rng) == 0;
            Var v = universal ? Var::x(++xs) : Var::y(++ys);
            blocks[block(rng)].push_back({universal ? NodeKind::Forall : NodeKind::Exists, v});
        }
        std::vector<Var> left_scope, right_scope;
        for (const auto& s : blocks[0]) {
            left_scope.push_back(s.var);
            right_scope.push_back(s.var);
        }
        for (const auto& s : blocks[1])
            left_scope.push_back(s.var);
        for (const auto& s : blocks[2])
            right_scope.push_back(s.var);
        if (left_scope.empty() || right_scope.empty())
            continue;

        std::vector<Var> a, b;
        bool ok = true;
        for (int n = 0; n < arity && ok; ++n) {
            bool placed = false;
            for (int attempt = 0; attempt < 16 && !placed; ++attempt) {
                std::uniform_int_distribution<std::size_t> ld(0, left_scope.size() - 1), rd(0, right_scope.size() - 1);
                const Var& u = left_scope[ld(rng)];
                const Var& v = right_scope[rd(rng)];
                if (u.is_existential() && v.is_existential() && u != v)
                    continue;
                a.push_back(u);
                b.push_back(v);
                placed = true;
            }
            ok = placed;
        }
        if (!ok)
            continue;

        std::set<Var> used(a.begin(), a.end());
        used.insert(b.begin(), b.end());
        // a is built from the left scope and b from the right one; the swap only moves the sign
        bool swap = coin(rng) == 1;
        Formula left_lit = Formula::atom("F", a);
        Formula right_lit = Formula::atom("F", b);
        if (swap)
            left_lit = Formula::neg(left_lit);
        else
            right_lit = Formula::neg(right_lit);
        Formula left = wrap(only_used(blocks[1], used), left_lit);
        Formula right = wrap(only_used(blocks[2], used), right_lit);
        return rectify(wrap(only_used(blocks[0], used), Formula::conj(left, right)));
    }
}

std::vector<Formula> random_corpus(std::uint64_t seed, std::size_t count, const RandomPsiOptions& opts)
{
    std::mt19937_64 rng(seed);
    std::vector<Formula> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_psi(rng, opts));
    return out;
}

void lift_binder(Derivation& d, const Var& v, std::size_t depth)
{
    auto bp = binder_path(d.current(), v);
    if (!bp)
        throw std::invalid_argument(v.str() + " is not bound");
    Path at = *bp;
    while (at.size() > depth) {
        int side = at.back();
        at.pop_back();
        const Formula& parent = subformula_at(d.current(), at);
        bool universal = v.is_universal();
        RuleId rule;
        if (parent.is_and())
            rule = side == 0 ? (universal ? RuleId::PN2 : RuleId::PN6) : (universal ? RuleId::PN1 : RuleId::PN5);
        else if (parent.is_or())
            rule = side == 0 ? (universal ? RuleId::PN4 : RuleId::PN8) : (universal ? RuleId::PN3 : RuleId::PN7);
        else
            throw std::logic_error("cannot lift " + v.str() + " past another quantifier");
        d.apply(rule, at, {Direction::RightToLeft, std::nullopt, std::nullopt});
    }
}

Derivation replay_recipe(const Formula& start, const Path& duplicate_at, const std::vector<Var>& prefix_order,
                         const std::vector<std::pair<Var, Var>>& substitutions)
{
    Derivation d(start);
    d.apply(RuleId::AndI, duplicate_at);
    for (std::size_t i = 0; i < prefix_order.size(); ++i)
        lift_binder(d, prefix_order[i], i);
    for (const auto& [x, y] : substitutions) {
        auto bp = binder_path(d.current(), x);
        if (!bp)
            throw std::invalid_argument(x.str() + " is not bound");
        d.apply(RuleId::ForallE, *bp, {Direction::LeftToRight, x, y});
    }
    return d;
}

} // namespace nnfc::testing
