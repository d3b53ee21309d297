#pragma once

#include "nnfc/calculus.hpp"
#include "nnfc/formula.hpp"
#include "nnfc/prenex.hpp"
#include "nnfc/psi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nnfc {

enum class Verdict { Contradictory, Satisfiable, Unknown };

enum class Witness {
    Refutation,       // certificate attached
    NoConnectedPair,
    C1,               // ambiguous substitution list
    C2,               // no optimal prenex
    AllPairsFail,     // every connected pair failed with C1 or C2
    NoUnifiableDisjunct,
    ContainsDisjunctionUndecided,
};

std::string verdict_name(Verdict v);
std::string witness_name(Witness w);

/** The intermediate stages computed for one two-literal subformula. */
struct PsiStages {
    Formula psi;
    Formula scoped;    // after scope minimization
    Formula optimized; // after existential multiplication
    std::size_t scope_steps = 0;
    EmStats em;
    SubstitutionList sigma;
    std::vector<PrenexForm> prenexes;
    std::optional<PrenexForm> chosen;
};

struct PairDecision {
    ConnectedPair pair;
    Verdict verdict = Verdict::Satisfiable;
    Witness witness = Witness::NoConnectedPair;
    std::optional<PsiStages> stages;
};

struct Decision {
    Verdict verdict = Verdict::Satisfiable;
    Witness witness = Witness::NoConnectedPair;
    std::optional<Certificate> certificate;
    std::optional<PsiStages> stages; // decide_psi only
    std::vector<PairDecision> pairs; // decide_wedge_nnf
    Formula formula;
    std::vector<Decision> disjuncts; // decide_foldnf
};

class InputContainsDisjunction : public std::invalid_argument {
public:
    InputContainsDisjunction() : std::invalid_argument("input contains a disjunction") {}
};

/** Decides a rectified disjunction-free formula with exactly two literals. */
Decision decide_psi(const Formula& psi);
/** Decides a rectified disjunction-free formula through its connected pairs. */
Decision decide_wedge_nnf(const Formula& f);
/** Decides a disjunction of rectified NNFs; Unknown when a disjunct is outside the decidable fragment. */
Decision decide_foldnf(const std::vector<Formula>& disjuncts);

} // namespace nnfc
