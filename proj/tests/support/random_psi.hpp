#pragma once

#include "nnfc/calculus.hpp"
#include "nnfc/formula.hpp"

#include <random>
#include <string>
#include <vector>

namespace nnfc::testing {

struct RandomPsiOptions {
    int max_quantifiers = 8;
    int max_arity = 5;
};

/**
 * A rectified, closed formula Q (Ql L1 & Qr L2) with one positive and one negative
 * literal of the same predicate that are connected. Each quantifier independently
 * lands in the outer, left or right block with a uniformly chosen kind.
 */
Formula random_psi(std::mt19937_64& rng, const RandomPsiOptions& opts = {});

std::vector<Formula> random_corpus(std::uint64_t seed, std::size_t count, const RandomPsiOptions& opts = {});

/**
 * Builds a refutation of the three-conjunct formula with one disjunction under a universal
 * (the conjunct-multiplication example): duplicate the first conjunct, pull the quantifiers out
 * in the given order, then eliminate universals by the given substitutions.
 */
Derivation replay_recipe(const Formula& start, const Path& duplicate_at, const std::vector<Var>& prefix_order,
                         const std::vector<std::pair<Var, Var>>& substitutions);

/** Moves the binder of v up to depth `depth` with right-to-left PN steps. */
void lift_binder(Derivation& d, const Var& v, std::size_t depth);

} // namespace nnfc::testing
