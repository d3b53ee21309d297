#include "nnfc/psi.hpp"

#include <functional>

namespace nnfc {

namespace {

bool rule_matches(const Formula& node, RuleId r)
{
    try {
        apply_rule(node, r, {});
        return true;
    } catch (const RuleError&) {
        return false;
    }
}

bool find_first(const Formula& f, RuleId r, Path& path)
{
    if (f.is_quant() && rule_matches(f, r))
        return true;
    for (int i = 0; i < f.num_children(); ++i) {
        path.push_back(i);
        if (find_first(f.child(i), r, path))
            return true;
        path.pop_back();
    }
    return false;
}

Var fresh_like(const Formula& f, const Var& v)
{
    int top = 0;
    for (const auto& u : all_vars(f))
        if (u.letter == v.letter)
            top = std::max(top, u.base);
    return Var(v.letter, top + 1);
}

} // namespace

std::size_t minimize_scopes(Derivation& d)
{
    static constexpr RuleId kOrder[] = {RuleId::PN1, RuleId::PN2, RuleId::PN5, RuleId::PN6, RuleId::PN9};
    std::size_t count = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (RuleId r : kOrder) {
            Path pos;
            if (!find_first(d.current(), r, pos))
                continue;
            Var v = subformula_at(d.current(), pos).var();
            d.apply(r, pos);
            ++count;
            if (r == RuleId::PN9) {
                // the right copy gets a fresh level-1 name so the result stays rectified
                Path right = pos;
                right.push_back(1);
                Payload rename{Direction::LeftToRight, v, fresh_like(d.current(), v)};
                d.apply(RuleId::SUB2, right, rename);
            }
            changed = true;
            break;
        }
    }
    return count;
}

Formula minimize_scopes(const Formula& psi)
{
    Derivation d(psi);
    minimize_scopes(d);
    return d.current();
}

} // namespace nnfc
