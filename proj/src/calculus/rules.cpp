#include "nnfc/calculus.hpp"

#include <array>

namespace nnfc {

namespace {

constexpr std::array<const char*, 17> kRuleNames = {
    "PN1", "PN2", "PN3", "PN4", "PN5", "PN6", "PN7", "PN8", "PN9", "PN10",
    "SUB1", "SUB2", "ForallE", "AndI", "ExistsM", "SAT1", "SAT2",
};

[[noreturn]] void mismatch(RuleId r, const std::string& why)
{
    throw RuleError(RuleError::Kind::PatternMismatch, rule_name(r) + ": " + why);
}

[[noreturn]] void violated(RuleId r, const std::string& why)
{
    throw RuleError(RuleError::Kind::SideConditionViolated, rule_name(r) + ": " + why);
}

struct PnShape {
    NodeKind quant;
    NodeKind conn;
    bool a_part_left; // PN1/3/5/7 keep the variable-free part on the left
};

PnShape pn_shape(RuleId r)
{
    switch (r) {
    case RuleId::PN1: return {NodeKind::Forall, NodeKind::And, true};
    case RuleId::PN2: return {NodeKind::Forall, NodeKind::And, false};
    case RuleId::PN3: return {NodeKind::Forall, NodeKind::Or, true};
    case RuleId::PN4: return {NodeKind::Forall, NodeKind::Or, false};
    case RuleId::PN5: return {NodeKind::Exists, NodeKind::And, true};
    case RuleId::PN6: return {NodeKind::Exists, NodeKind::And, false};
    case RuleId::PN7: return {NodeKind::Exists, NodeKind::Or, true};
    case RuleId::PN8: return {NodeKind::Exists, NodeKind::Or, false};
    case RuleId::PN9: return {NodeKind::Forall, NodeKind::And, true};
    default: return {NodeKind::Exists, NodeKind::Or, true}; // PN10
    }
}

const char* kind_word(NodeKind k)
{
    switch (k) {
    case NodeKind::Forall: return "universal quantifier";
    case NodeKind::Exists: return "existential quantifier";
    case NodeKind::And: return "conjunction";
    case NodeKind::Or: return "disjunction";
    default: return "node";
    }
}

Formula apply_pn(const Formula& node, RuleId rule, Direction dir)
{
    PnShape s = pn_shape(rule);
    bool splitting = rule == RuleId::PN9 || rule == RuleId::PN10;

    if (dir == Direction::LeftToRight) {
        if (node.kind() != s.quant)
            mismatch(rule, std::string("expected a ") + kind_word(s.quant));
        if (node.body().kind() != s.conn)
            mismatch(rule, std::string("quantifier scope is not a ") + kind_word(s.conn));
        const Var& v = node.var();
        const Formula& l = node.body().left();
        const Formula& r = node.body().right();
        if (splitting)
            return Formula::binary(s.conn, Formula::quant(s.quant, v, l), Formula::quant(s.quant, v, r));
        const Formula& a_part = s.a_part_left ? l : r;
        if (occurs_free(a_part, v))
            violated(rule, v.str() + " occurs in the part the quantifier would leave");
        if (s.a_part_left)
            return Formula::binary(s.conn, l, Formula::quant(s.quant, v, r));
        return Formula::binary(s.conn, Formula::quant(s.quant, v, l), r);
    }

    if (node.kind() != s.conn)
        mismatch(rule, std::string("expected a ") + kind_word(s.conn));
    const Formula& l = node.left();
    const Formula& r = node.right();
    if (splitting) {
        if (l.kind() != s.quant || r.kind() != s.quant || l.var() != r.var())
            mismatch(rule, "both sides must be bound by the same quantifier");
        return Formula::quant(s.quant, l.var(), Formula::binary(s.conn, l.body(), r.body()));
    }
    const Formula& q = s.a_part_left ? r : l;
    const Formula& a_part = s.a_part_left ? l : r;
    if (q.kind() != s.quant)
        mismatch(rule, std::string("expected a ") + kind_word(s.quant) + " on the " +
                           (s.a_part_left ? "right" : "left"));
    if (occurs_free(a_part, q.var()))
        violated(rule, q.var().str() + " would be captured");
    if (s.a_part_left)
        return Formula::quant(s.quant, q.var(), Formula::binary(s.conn, l, q.body()));
    return Formula::quant(s.quant, q.var(), Formula::binary(s.conn, q.body(), r));
}

bool bound_inside(const Formula& f, const Var& v)
{
    for (const auto& b : binders(f))
        if (b == v)
            return true;
    return false;
}

bool exists_on_path(const Formula& f, const Path& p, const Var& mu)
{
    const Formula* cur = &f;
    for (int step : p) {
        if (cur->is_exists() && cur->var() == mu)
            return true;
        cur = &cur->child(step);
    }
    return false;
}

} // namespace

std::string rule_name(RuleId r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> rule_from_name(const std::string& name)
{
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (name == kRuleNames[i])
            return static_cast<RuleId>(i);
    return std::nullopt;
}

bool is_pn_rule(RuleId r) { return static_cast<int>(r) <= static_cast<int>(RuleId::PN10); }

Formula apply_rule(const Formula& f, RuleId rule, const Path& position, const Payload& payload)
{
    if (!has_path(f, position))
        mismatch(rule, "position " + path_str(position) + " does not exist");
    const Formula& node = subformula_at(f, position);

    if (is_pn_rule(rule))
        return replace_at(f, position, apply_pn(node, rule, payload.dir));

    switch (rule) {
    case RuleId::SUB1:
    case RuleId::SUB2: {
        NodeKind want = rule == RuleId::SUB1 ? NodeKind::Exists : NodeKind::Forall;
        if (node.kind() != want)
            mismatch(rule, std::string("expected a ") + kind_word(want));
        if (payload.from && *payload.from != node.var())
            mismatch(rule, "quantifier binds " + node.var().str() + ", not " + payload.from->str());
        if (!payload.to)
            mismatch(rule, "missing new variable");
        const Var& nv = *payload.to;
        if (nv == node.var())
            return f;
        if (all_vars(node.body()).count(nv))
            violated(rule, nv.str() + " occurs in the scope");
        return replace_at(f, position, Formula::quant(node.kind(), nv, substitute(node.body(), node.var(), nv)));
    }
    case RuleId::ForallE: {
        if (!node.is_forall())
            mismatch(rule, "expected a universal quantifier");
        if (payload.from && *payload.from != node.var())
            mismatch(rule, "quantifier binds " + node.var().str() + ", not " + payload.from->str());
        if (!payload.to)
            mismatch(rule, "missing replacing variable");
        const Var& mu = *payload.to;
        if (!mu.is_existential())
            violated(rule, mu.str() + " is not an existential variable");
        if (bound_inside(node.body(), mu))
            violated(rule, mu.str() + " would be captured inside the scope");
        Formula replaced = substitute(node.body(), node.var(), mu);
        if (exists_on_path(f, position, mu))
            return replace_at(f, position, replaced);
        if (mu.is_y0()) {
            if (all_vars(f).count(mu))
                violated(rule, "y0 already occurs and does not bind this position");
            return Formula::exists(mu, replace_at(f, position, replaced));
        }
        violated(rule, node.var().str() + " is not in the scope of E " + mu.str());
    }
    case RuleId::AndI: {
        Formula doubled = max_subscript(Formula::conj(node, node));
        Formula out = replace_at(f, position, doubled);
        if (is_rectified(f) && !is_rectified(out))
            violated(rule, "subscripted copies clash with existing binders");
        return out;
    }
    case RuleId::ExistsM: {
        if (!node.is_exists() || !node.body().is_and())
            mismatch(rule, "expected E v (A & B)");
        const Var& mu = node.var();
        Var m1 = mu.with_sub(1), m2 = mu.with_sub(2);
        auto used = all_vars(f);
        if (used.count(m1) || used.count(m2))
            violated(rule, "subscripted copies of " + mu.str() + " are not fresh");
        const Formula& a = node.body().left();
        const Formula& b = node.body().right();
        Formula out = Formula::conj(Formula::exists(m1, substitute(a, mu, m1)), Formula::exists(m2, substitute(b, mu, m2)));
        return replace_at(f, position, out);
    }
    case RuleId::SAT1: {
        if (!node.is_and() || !(node.left().is_sat() || node.right().is_sat()))
            mismatch(rule, "expected sat & A");
        return replace_at(f, position, node.left().is_sat() ? node.right() : node.left());
    }
    case RuleId::SAT2: {
        if (!node.is_or() || !(node.left().is_sat() || node.right().is_sat()))
            mismatch(rule, "expected sat | A");
        return replace_at(f, position, Formula::sat());
    }
    default:
        mismatch(rule, "unknown rule");
    }
}

bool is_explicit_contradiction(const Formula& f)
{
    if (!is_nnf(f) || contains_forall(f) || contains_sat(f))
        return false;
    DnfMatrix m = dnf_matrix(f);
    for (const auto& disjunct : m.matrix) {
        bool found = false;
        for (std::size_t i = 0; i < disjunct.size() && !found; ++i)
            for (std::size_t j = 0; j < disjunct.size() && !found; ++j)
                found = disjunct[i].polarity == Polarity::Pos && disjunct[j].polarity == Polarity::Neg &&
                        disjunct[i].pred == disjunct[j].pred && disjunct[i].args == disjunct[j].args;
        if (!found)
            return false;
    }
    return true;
}

VerifyResult verify_certificate(const Certificate& c)
{
    if (!c.initial.valid())
        return {false, 0, "missing initial formula"};
    Formula cur = c.initial;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const DerivationStep& s = c.steps[i];
        Formula next;
        try {
            next = apply_rule(cur, s.rule, s.position, s.payload);
        } catch (const RuleError& e) {
            return {false, i + 1, e.what()};
        } catch (const std::exception& e) {
            return {false, i + 1, e.what()};
        }
        if (s.result.valid()) {
            if (!equal_modulo_ac(next, s.result))
                return {false, i + 1, "recorded result differs from " + rule_name(s.rule) + " applied at " + path_str(s.position)};
            cur = s.result;
        } else {
            cur = next;
        }
    }
    std::size_t last = c.steps.size() + 1;
    if (c.final.valid()) {
        if (!equal_modulo_ac(cur, c.final))
            return {false, last, "final formula is not the result of the last step"};
        cur = c.final;
    }
    if (c.claims_refutation && !is_explicit_contradiction(cur))
        return {false, last, "final formula is not an explicit contradiction"};
    return {true, 0, ""};
}

const Formula& Derivation::apply(RuleId rule, const Path& position, const Payload& payload)
{
    Formula next = apply_rule(current_, rule, position, payload);
    steps_.push_back({rule, position, payload, next});
    current_ = std::move(next);
    return current_;
}

void Derivation::append(const Derivation& other)
{
    if (!(other.initial_ == current_))
        throw std::logic_error("derivations do not chain");
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    current_ = other.current_;
}

Certificate Derivation::certificate(bool claims_refutation) const
{
    return {initial_, steps_, current_, claims_refutation};
}

} // namespace nnfc
