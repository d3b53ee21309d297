#include "nnfc/decision.hpp"

#include "nnfc/pruner.hpp"

namespace nnfc {

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Contradictory: return "CONTRADICTORY";
    case Verdict::Satisfiable: return "SATISFIABLE";
    default: return "UNKNOWN";
    }
}

std::string witness_name(Witness w)
{
    switch (w) {
    case Witness::Refutation: return "refutation";
    case Witness::NoConnectedPair: return "no connected pair";
    case Witness::C1: return "C1: ambiguous substitution list";
    case Witness::C2: return "C2: no optimal prenex";
    case Witness::AllPairsFail: return "all pairs fail";
    case Witness::NoUnifiableDisjunct: return "matrix disjunct without unifiable pair";
    default: return "contains disjunction, undecided";
    }
}

namespace {

Path forall_position(const Formula& f, const Var& v)
{
    Path p;
    const Formula* node = &f;
    while (node->is_quant()) {
        if (node->is_forall() && node->var() == v)
            return p;
        p.push_back(0);
        node = &node->body();
    }
    throw std::logic_error("universal " + v.str() + " not found in prefix");
}

} // namespace

Decision decide_psi(const Formula& psi)
{
    Decision out;
    out.formula = psi;
    std::optional<ConnectedPair> pair;
    try {
        pair = pair_of(psi);
    } catch (const std::invalid_argument&) {
    }
    if (!pair || !literals_connected(pair->l1, pair->l2)) {
        out.witness = Witness::NoConnectedPair;
        return out;
    }

    PsiStages st;
    st.psi = psi;
    Derivation d(psi);
    st.scope_steps = minimize_scopes(d);
    st.scoped = d.current();
    st.em = em_optimize(d);
    st.em.pn_steps += st.scope_steps;
    st.optimized = d.current();
    st.sigma = substitution_list(pair_of(st.optimized));

    if (st.sigma.ambiguous()) {
        out.witness = Witness::C1;
        out.stages = std::move(st);
        return out;
    }
    st.prenexes = enumerate_optimized_prenexes(st.optimized);
    auto optimal = optimal_prenexes(st.prenexes, st.sigma);
    if (optimal.empty()) {
        out.witness = Witness::C2;
        out.stages = std::move(st);
        return out;
    }
    st.chosen = optimal.front();

    for (const auto& step : st.chosen->steps)
        d.apply(step.rule, step.position, {Direction::RightToLeft, std::nullopt, std::nullopt});
    for (const auto& q : st.chosen->prefix) {
        if (q.kind != NodeKind::Forall)
            continue;
        Path at = forall_position(d.current(), q.var);
        d.apply(RuleId::ForallE, at, {Direction::LeftToRight, q.var, st.sigma.target(q.var)});
    }
    if (!is_explicit_contradiction(d.current()))
        throw std::logic_error("substitutions did not produce an explicit contradiction: " + d.current().str());

    out.verdict = Verdict::Contradictory;
    out.witness = Witness::Refutation;
    out.certificate = d.certificate(true);
    out.stages = std::move(st);
    return out;
}

Decision decide_wedge_nnf(const Formula& f)
{
    if (!is_wedge_nnf(f))
        throw InputContainsDisjunction();
    Decision out;
    out.formula = f;
    auto pairs = connected_pairs(f);
    if (pairs.empty()) {
        out.witness = Witness::NoConnectedPair;
        return out;
    }
    out.witness = Witness::AllPairsFail;
    for (const auto& p : pairs) {
        Decision sub = decide_psi(extract_subformula(f, p));
        out.pairs.push_back({p, sub.verdict, sub.witness, sub.stages});
        if (sub.verdict == Verdict::Contradictory && !out.certificate) {
            out.verdict = Verdict::Contradictory;
            out.witness = Witness::Refutation;
            out.certificate = std::move(sub.certificate);
        }
    }
    if (out.pairs.size() == 1 && out.verdict != Verdict::Contradictory)
        out.witness = out.pairs[0].witness;
    return out;
}

Decision decide_foldnf(const std::vector<Formula>& disjuncts)
{
    Decision out;
    out.formula = disjuncts.empty() ? Formula() : or_all(disjuncts);
    bool any_sat = false, any_unknown = false;
    for (const auto& d : disjuncts) {
        Decision sub;
        if (is_wedge_nnf(d)) {
            sub = decide_wedge_nnf(d);
        } else {
            sub.formula = d;
            if (dinonwid_check(d) == DinonwidResult::DefinitelySatisfiable) {
                sub.verdict = Verdict::Satisfiable;
                sub.witness = Witness::NoUnifiableDisjunct;
            } else {
                sub.verdict = Verdict::Unknown;
                sub.witness = Witness::ContainsDisjunctionUndecided;
            }
        }
        any_sat = any_sat || sub.verdict == Verdict::Satisfiable;
        any_unknown = any_unknown || sub.verdict == Verdict::Unknown;
        out.disjuncts.push_back(std::move(sub));
    }
    if (any_sat) {
        out.verdict = Verdict::Satisfiable;
        for (const auto& s : out.disjuncts)
            if (s.verdict == Verdict::Satisfiable) {
                out.witness = s.witness;
                break;
            }
    } else if (any_unknown) {
        out.verdict = Verdict::Unknown;
        out.witness = Witness::ContainsDisjunctionUndecided;
    } else {
        out.verdict = Verdict::Contradictory;
        out.witness = Witness::Refutation;
    }
    return out;
}

} // namespace nnfc
