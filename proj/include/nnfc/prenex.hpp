#pragma once

#include "nnfc/calculus.hpp"
#include "nnfc/formula.hpp"
#include "nnfc/psi.hpp"

#include <set>
#include <string>
#include <vector>

namespace nnfc {

struct XList {
    Var xvar;
    int side = 0; // 0 untagged; 1 or 2 when literal sides are kept apart
    std::set<Var> yvars;

    bool unambiguous() const { return yvars.size() == 1; }
    bool operator==(const XList&) const = default;
    std::string str() const;
};

struct SubstitutionList {
    std::vector<XList> entries; // sorted by (xvar, side)

    bool ambiguous() const;
    /** The single y variable assigned to xvar; throws if absent or ambiguous. */
    const Var& target(const Var& xvar) const;
    std::string str() const;
};

/**
 * Maximal substitution list of a connected pair. With tag_sides the x variables of
 * the positive and negative literal are treated as distinct even when they share a name.
 */
SubstitutionList substitution_list(const ConnectedPair& p, bool tag_sides = false);

/** One PN step on the way from the anti-prenex formula to a prenex form. */
struct PrenexStep {
    RuleId rule;
    Path position;
};

struct PrenexForm {
    std::vector<QuantifiedVar> prefix;
    Formula matrix;
    std::vector<PrenexStep> steps; // right-to-left PN applications reaching this form

    Formula formula() const;
    std::string prefix_str() const;
};

/** All optimized prenex forms, branch-left-first, deduplicated by prefix. */
std::vector<PrenexForm> enumerate_optimized_prenexes(const Formula& psi2);

/** True iff every universal stands right of each existential its x list names (y0 excepted). */
bool is_optimal(const PrenexForm& form, const SubstitutionList& sigma);
std::vector<PrenexForm> optimal_prenexes(const std::vector<PrenexForm>& forms, const SubstitutionList& sigma);

} // namespace nnfc
