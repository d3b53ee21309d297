#include "nnfc/pruner.hpp"

#include "nnfc/prenex.hpp"

#include <algorithm>

namespace nnfc {

std::string criterion_name(UnifCriterion c)
{
    switch (c) {
    case UnifCriterion::C1U1: return "C1U1";
    case UnifCriterion::C2U1: return "C2U1";
    case UnifCriterion::C3U1: return "C3U1";
    case UnifCriterion::C4U1: return "C4U1";
    default: return "C5U1";
    }
}

bool c1u1(const ConnectedPair& p)
{
    return substitution_list(p, true).ambiguous();
}

namespace {

bool c2u1_oriented(const std::vector<Var>& la, const std::vector<Var>& lb, const Formula& host)
{
    for (std::size_t n = 0; n < la.size(); ++n) {
        const Var& nu1 = la[n];
        const Var& nu2 = lb[n];
        if (!nu1.is_universal() || !nu2.is_universal())
            continue;
        for (std::size_t m = 0; m < la.size(); ++m) {
            const Var& mu = la[m];
            if (mu.is_existential() && lb[m] == nu2 && in_scope_of(host, mu, nu1))
                return true;
        }
    }
    return false;
}

bool mentions(const std::vector<Var>& args, const Var& v)
{
    return std::find(args.begin(), args.end(), v) != args.end();
}

} // namespace

bool c2u1(const ConnectedPair& p, const Formula& host)
{
    return c2u1_oriented(p.l1.args, p.l2.args, host) || c2u1_oriented(p.l2.args, p.l1.args, host);
}

bool c3u1(const ConnectedPair& p, const Formula& host)
{
    // Sides are kept apart: a variable shared by both literals is split by EM and PN9,
    // so its two occurrences are replaced independently.
    SubstitutionList sigma = substitution_list(p, true);
    const std::vector<Var>* args[3] = {nullptr, &p.l1.args, &p.l2.args};
    for (const auto& l1 : sigma.entries) {
        const Var& nu1 = l1.xvar;
        int own = l1.side;
        int other = 3 - own;
        for (const auto& l2 : sigma.entries) {
            const Var& nu2 = l2.xvar;
            if (l2.side != other || nu2 == nu1)
                continue;
            for (const Var& mu2 : l1.yvars) {
                if (mu2.is_y0() || !mentions(*args[other], mu2) || !in_scope_of(host, mu2, nu2))
                    continue;
                for (const Var& mu1 : l2.yvars)
                    if (!mu1.is_y0() && mu1 != mu2 && mentions(*args[own], mu1) && in_scope_of(host, mu1, nu1))
                        return true;
            }
        }
    }
    return false;
}

OptimizedChecks optimized_checks(const ConnectedPair& p)
{
    Formula psi = extract_subformula(p.host, p);
    Formula optimized = em_optimize(psi);
    ConnectedPair q = pair_of(optimized);
    SubstitutionList sigma = substitution_list(q);

    OptimizedChecks out;
    out.c3 = c3u1(q, optimized);
    out.c4 = sigma.ambiguous();
    for (const auto& l : sigma.entries)
        for (const auto& mu : l.yvars)
            if (!mu.is_y0() && in_scope_of(optimized, mu, l.xvar))
                out.c5 = true;
    return out;
}

C45 c4u1_c5u1(const ConnectedPair& p)
{
    OptimizedChecks o = optimized_checks(p);
    return {o.c4, o.c5};
}

std::vector<PairFilterResult> unifiable_pairs(const Formula& f)
{
    std::vector<PairFilterResult> out;
    for (auto& p : connected_pairs(f)) {
        PairFilterResult r{p, {}, false};
        if (c1u1(p))
            r.failed.push_back(UnifCriterion::C1U1);
        if (c2u1(p, f))
            r.failed.push_back(UnifCriterion::C2U1);
        bool c3 = c3u1(p, f);
        if (r.failed.empty()) {
            OptimizedChecks o = optimized_checks(p);
            c3 = c3 || o.c3;
            if (c3)
                r.failed.push_back(UnifCriterion::C3U1);
            if (o.c4)
                r.failed.push_back(UnifCriterion::C4U1);
            if (o.c5)
                r.failed.push_back(UnifCriterion::C5U1);
        } else if (c3) {
            r.failed.push_back(UnifCriterion::C3U1);
        }
        r.unifiable = r.failed.empty();
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

Formula drop_unused_binders(const Formula& f)
{
    if (f.is_quant()) {
        Formula body = drop_unused_binders(f.body());
        if (!occurs_free(body, f.var()))
            return body;
        return Formula::quant(f.kind(), f.var(), body);
    }
    if (f.is_binary())
        return Formula::binary(f.kind(), drop_unused_binders(f.left()), drop_unused_binders(f.right()));
    return f;
}

Formula sat_rules(const Formula& f)
{
    if (f.is_quant()) {
        Formula body = sat_rules(f.body());
        if (body.is_sat())
            return body;
        return Formula::quant(f.kind(), f.var(), body);
    }
    if (f.is_binary()) {
        Formula l = sat_rules(f.left());
        Formula r = sat_rules(f.right());
        if (f.is_and()) {
            if (l.is_sat())
                return r; // SAT1
            if (r.is_sat())
                return l;
        } else if (l.is_sat() || r.is_sat()) {
            return Formula::sat(); // SAT2
        }
        return Formula::binary(f.kind(), l, r);
    }
    return f;
}

} // namespace

Formula simplify_sat(const Formula& f)
{
    Formula cur = f;
    while (true) {
        Formula next = sat_rules(drop_unused_binders(cur));
        if (next == cur)
            return cur;
        cur = next;
    }
}

Formula prune(const Formula& f)
{
    Formula cur = f;
    while (!cur.is_sat()) {
        std::vector<Path> keep;
        for (const auto& r : unifiable_pairs(cur))
            if (r.unifiable) {
                keep.push_back(r.pair.l1.path);
                keep.push_back(r.pair.l2.path);
            }
        Formula marked = cur;
        for (const auto& lit : literals(cur))
            if (std::find(keep.begin(), keep.end(), lit.path) == keep.end())
                marked = replace_at(marked, lit.path, Formula::sat());
        Formula next = simplify_sat(marked);
        if (next == cur)
            break;
        cur = next;
    }
    return cur;
}

DinonwidResult dinonwid_check(const Formula& d)
{
    DnfMatrix m = dnf_matrix(d);
    std::vector<std::pair<Path, Path>> unifiable;
    for (const auto& r : unifiable_pairs(d))
        if (r.unifiable)
            unifiable.emplace_back(r.pair.l1.path, r.pair.l2.path);

    for (const auto& disjunct : m.matrix) {
        auto present = [&](const Path& p) {
            return std::any_of(disjunct.begin(), disjunct.end(), [&](const LiteralOccurrence& l) { return l.path == p; });
        };
        bool has_pair = std::any_of(unifiable.begin(), unifiable.end(),
                                    [&](const auto& pr) { return present(pr.first) && present(pr.second); });
        if (!has_pair)
            return DinonwidResult::DefinitelySatisfiable;
    }
    return DinonwidResult::Inconclusive;
}

} // namespace nnfc
