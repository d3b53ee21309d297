#pragma once

#include "nnfc/calculus.hpp"
#include "nnfc/formula.hpp"

#include <set>
#include <vector>

namespace nnfc {

struct ConnectedPair {
    LiteralOccurrence l1; // positive
    LiteralOccurrence l2; // negative
    Formula host;
};

/** Connected literals: same predicate and arity, opposite polarity, no clash of distinct y variables. */
bool literals_connected(const LiteralOccurrence& pos, const LiteralOccurrence& neg);
std::vector<ConnectedPair> connected_pairs(const Formula& f);

/** The sub-formula with only the pair's literals, their binders and the joining connective (| read as &). */
Formula extract_subformula(const Formula& f, const ConnectedPair& p);

/** The literal pair of a formula with exactly one positive and one negative literal. */
ConnectedPair pair_of(const Formula& psi);

/** Scope minimization (PN1, PN2, PN5, PN6, PN9 loop). Returns the number of PN steps taken. */
std::size_t minimize_scopes(Derivation& d);
Formula minimize_scopes(const Formula& psi);

using XXList = std::set<Var>;

struct XYPair {
    Var xvar;
    Var yvar;
    bool operator==(const XYPair&) const = default;
};
struct YXPair {
    Var yvar;
    Var xvar;
    bool operator==(const YXPair&) const = default;
};
struct AlignedPairs {
    std::vector<XYPair> xy;
    std::vector<YXPair> yx;
};

std::vector<XXList> xx_lists(const ConnectedPair& p);
AlignedPairs xy_yx_pairs(const ConnectedPair& p);

enum class EmGuard { Yes, DirectCase, IndirectCase };

/** The guard on existential multiplication at an E v (A & B) node of a two-literal formula. */
EmGuard em_applicable(const Formula& f, const Path& position);

struct EmStats {
    std::size_t pn_steps = 0;
    std::vector<Var> multiplied; // existentials split by ExistsM, in application order
};

/** Existential-multiplication optimization: scope minimization interleaved with guarded ExistsM. */
EmStats em_optimize(Derivation& d);
Formula em_optimize(const Formula& psi);

/** The same separation reached with one conjunct multiplication instead of ExistsM. */
Formula em_free_route(const Formula& psi);

/** Path of the binder of v, if any. */
std::optional<Path> binder_path(const Formula& f, const Var& v);
/** True iff the binder of inner lies strictly inside the scope of the binder of outer. */
bool in_scope_of(const Formula& f, const Var& inner, const Var& outer);

} // namespace nnfc
