#pragma once

#include "nnfc/formula.hpp"
#include "nnfc/psi.hpp"

#include <string>
#include <vector>

namespace nnfc {

enum class UnifCriterion { C1U1, C2U1, C3U1, C4U1, C5U1 };

std::string criterion_name(UnifCriterion c);

struct PairFilterResult {
    ConnectedPair pair;
    std::vector<UnifCriterion> failed;
    bool unifiable = false;
};

/** Ambiguous substitution list even with the two literals' x variables kept apart. */
bool c1u1(const ConnectedPair& p);
/** An x variable aligned with another x that is in turn aligned with a y bound inside the first one's scope. */
bool c2u1(const ConnectedPair& p, const Formula& host);
/** Two x variables forced onto y variables of the opposite literal, each y bound inside its own literal's x. */
bool c3u1(const ConnectedPair& p, const Formula& host);

struct OptimizedChecks {
    bool c3 = false; // C3U1 re-read on the optimized subformula
    bool c4 = false;
    bool c5 = false;
};

/** Builds the pair's subformula, optimizes it and checks C4U1/C5U1 (and C3U1 again) there. */
OptimizedChecks optimized_checks(const ConnectedPair& p);

struct C45 {
    bool c4 = false;
    bool c5 = false;
};
C45 c4u1_c5u1(const ConnectedPair& p);

std::vector<PairFilterResult> unifiable_pairs(const Formula& f);

/** Replaces literals outside every unifiable pair by sat and simplifies; repeated until stable. */
Formula prune(const Formula& f);

/** Drops quantifiers whose variable is not used, then applies SAT1/SAT2 until stable. */
Formula simplify_sat(const Formula& f);

enum class DinonwidResult { DefinitelySatisfiable, Inconclusive };

DinonwidResult dinonwid_check(const Formula& d);

} // namespace nnfc
