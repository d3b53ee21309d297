#include "nnfc/prenex.hpp"

#include <algorithm>
#include <map>

namespace nnfc {

Formula PrenexForm::formula() const
{
    Formula f = matrix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
        f = Formula::quant(it->kind, it->var, f);
    return f;
}

std::string PrenexForm::prefix_str() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i)
            out += ",";
        out += prefix[i].str();
    }
    return out + "]";
}

namespace {

bool has_quantifier(const Formula& f)
{
    return quantifier_count(f) > 0;
}

bool only_universals(const Formula& f)
{
    if (f.is_exists())
        return false;
    for (int i = 0; i < f.num_children(); ++i)
        if (!only_universals(f.child(i)))
            return false;
    return true;
}

struct Branch {
    Formula f;
    std::size_t depth; // number of quantifiers above the conjunction
    std::vector<PrenexStep> steps;
};

PrenexForm finish(const Branch& b)
{
    PrenexForm form;
    const Formula* node = &b.f;
    while (node->is_quant()) {
        form.prefix.push_back({node->kind(), node->var()});
        node = &node->body();
    }
    form.matrix = *node;
    form.steps = b.steps;
    return form;
}

void pull(Branch& b, RuleId rule)
{
    Path at(b.depth, 0);
    b.f = apply_rule(b.f, rule, at, {Direction::RightToLeft, std::nullopt, std::nullopt});
    b.steps.push_back({rule, at});
    ++b.depth;
}

} // namespace

std::vector<PrenexForm> enumerate_optimized_prenexes(const Formula& psi2)
{
    if (!is_wedge_nnf(psi2) || literals(psi2).size() > 2)
        throw std::invalid_argument("prenex enumeration expects a disjunction-free formula with at most two literals");

    Branch start{psi2, 0, {}};
    const Formula* node = &psi2;
    while (node->is_quant()) {
        node = &node->body();
        ++start.depth;
    }

    std::vector<PrenexForm> out;
    std::vector<Branch> pending{start};
    while (!pending.empty()) {
        Branch b = std::move(pending.front());
        pending.erase(pending.begin());
        while (true) {
            const Formula& conj = subformula_at(b.f, Path(b.depth, 0));
            if (!conj.is_and()) {
                out.push_back(finish(b));
                break;
            }
            const Formula& a = conj.left();
            const Formula& c = conj.right();
            if (!has_quantifier(a) && !has_quantifier(c)) {
                out.push_back(finish(b));
                break;
            }
            if (a.is_exists())
                pull(b, RuleId::PN6);
            else if (c.is_exists())
                pull(b, RuleId::PN5);
            else if (only_universals(a) && c.is_forall())
                pull(b, RuleId::PN1);
            else if (only_universals(c) && a.is_forall())
                pull(b, RuleId::PN2);
            else {
                Branch other = b;
                pull(b, RuleId::PN2);
                pull(other, RuleId::PN1);
                pending.insert(pending.begin(), {b, other});
                break;
            }
        }
    }

    std::vector<PrenexForm> unique;
    for (auto& form : out) {
        bool seen = std::any_of(unique.begin(), unique.end(),
                                [&](const PrenexForm& u) { return u.prefix == form.prefix; });
        if (!seen)
            unique.push_back(std::move(form));
    }
    return unique;
}

bool is_optimal(const PrenexForm& form, const SubstitutionList& sigma)
{
    std::map<Var, std::size_t> pos;
    for (std::size_t i = 0; i < form.prefix.size(); ++i)
        pos[form.prefix[i].var] = i;
    for (const auto& l : sigma.entries) {
        auto xv = pos.find(l.xvar);
        if (xv == pos.end())
            return false;
        for (const auto& y : l.yvars) {
            if (y.is_y0())
                continue;
            auto yv = pos.find(y);
            if (yv == pos.end() || yv->second > xv->second)
                return false;
        }
    }
    return true;
}

std::vector<PrenexForm> optimal_prenexes(const std::vector<PrenexForm>& forms, const SubstitutionList& sigma)
{
    std::vector<PrenexForm> out;
    for (const auto& f : forms)
        if (is_optimal(f, sigma))
            out.push_back(f);
    return out;
}

} // namespace nnfc
