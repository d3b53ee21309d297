#pragma once

// Worked examples with known outcomes, shared by the unit tests and the acceptance run.

#include "nnfc/formula.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nnfc::golden {

// Scope minimization: the last PN9 split renames the right copy to a fresh x.
inline const char* kScopeInput = "E y1 A x1 E y2 A x2 E y3 (F(x1,x2,y1,y1) & ~F(y2,y3,x1,y1))";
inline const char* kScopeExpected = "E y1 (A x1 A x2 F(x1,x2,y1,y1) & A x3 E y2 E y3 ~F(y2,y3,x3,y1))";

// Existential multiplication splits y1; the one-copy conjunct-multiplication route gets the same shape.
inline const char* kSplitInput = "A x1 E y1 (A x3 F(y1,x1,x3) & A x2 ~F(x2,y1,y1))";
inline const char* kSplitExpected = "A x1 E y1_1 A x3 F(y1_1,x1,x3) & E y1_2 A x2 ~F(x2,y1_2,y1_2)";
inline const char* kSplitViaCopy = "A x1_1 E y1_1 A x3_1 F(y1_1,x1_1,x3_1) & E y1_2 A x2_2 ~F(x2_2,y1_2,y1_2)";
inline const char* kSplitSigma = "{{x1,y1_2}, {x2,y1_1}, {x3,y1_2}}";
inline const char* kSplitFinal = "E y1_1 E y1_2 (F(y1_1,y1_2,y1_2) & ~F(y1_1,y1_2,y1_2))";
inline const char* kSplitPrenexPrefix = "[E y1_2,A x1,E y1_1,A x3,A x2]";

// Substitution list with a pure-x cluster that defaults to y0.
inline const char* kSigmaPsi = "E y2 A x1 A x2 A x3 A x4 (F(x1,x2,x2,x4) & ~F(y2,x1,x3,x4))";
inline const char* kSigmaExpected = "{{x1,y2}, {x2,y2}, {x3,y2}, {x4,y0}}";

// Prenex enumeration that branches once; only the second form is optimal.
inline const char* kPrenexInput = "E y1 A x1 E y2 A x2 F(y1,x1,y2,x2) & A x3 E y3 A x4 A x5 ~F(x3,y3,x4,x5)";
inline const char* kPrenexFirst = "[E y1,A x1,E y2,A x3,E y3,A x4,A x5,A x2]";
inline const char* kPrenexSecond = "[E y1,A x3,E y3,A x1,E y2,A x4,A x5,A x2]";
inline const char* kPrenexSigma = "{{x1,y3}, {x2,y0}, {x3,y1}, {x4,y2}, {x5,y0}}";

// Two connected pairs; the G pair fails, the F pair refutes.
inline const char* kTwoPairs = "A x1 E y2 (~G(y2,y2) & E y1 (A x3 F(y1,x1,x3) & A x2 ~F(x2,y1,y1)) & G(x1,y2))";
inline const char* kTwoPairsPruned = "A x1 E y1 (A x3 F(y1,x1,x3) & A x2 ~F(x2,y1,y1))";

inline const char* kNoOptimalPrenex = "A x1 E y1 F(x1,y1) & A x2 ~F(x2,x2)";
inline const char* kAmbiguous = "E y1 E y2 A x1 E y3 (F(y1,x1,y3) & ~F(x1,y2,y3))";
inline const char* kIndirectCase = "E y1 (A x1 A x2 F(y1,x1,x1,x2,x2) & A x3 A x4 ~F(x3,x3,x4,x4,y1))";
inline const char* kGroundPair = "E y1 (F(y1) & ~F(y1))";

enum class Expected { C1, C2 };

/** Paradigm satisfiable formulas with the condition that blocks a refutation. */
inline const std::vector<std::pair<const char*, Expected>> kBlocked = {
    {"E y1 E y2 F(y1,y2) & A x1 ~F(x1,x1)", Expected::C1},
    {"E y1 A x1 F(x1,x1,y1) & E y2 A x2 ~F(x2,y2,x2)", Expected::C1},
    {"E y1 E y2 A x1 E y3 (F(y1,x1,y3) & ~F(x1,y2,y3))", Expected::C1},
    {"A x1 E y1 F(x1,y1) & A x2 ~F(x2,x2)", Expected::C2},
    {"A x1 E y1 (F(x1,y1) & E y2 ~F(y2,y1))", Expected::C2},
    {"A x1 E y1 F(x1,y1) & A x2 E y2 ~F(y2,x2)", Expected::C2},
    {"A x1 E y1 (E y2 F(y1,y2) & ~F(y1,x1))", Expected::C2},
};

// Conjunct multiplication example: one disjunction under a universal, refutable only with one copy.
inline const char* kCopyNeeded =
    "A x1 (A x2 A x6 F(x1,x2,x6) | A x3 A x7 ~F(x3,x1,x7)) & E y1 A x4 E y3 ~F(y1,x4,y3) & "
    "E y2 A x5 E y4 F(x5,y2,y4)";
inline const char* kCopyNeededDuplicated =
    "A x1_1 (A x2_1 A x6_1 F(x1_1,x2_1,x6_1) | A x3_1 A x7_1 ~F(x3_1,x1_1,x7_1)) & "
    "A x1_2 (A x2_2 A x6_2 F(x1_2,x2_2,x6_2) | A x3_2 A x7_2 ~F(x3_2,x1_2,x7_2)) & "
    "E y1 A x4 E y3 ~F(y1,x4,y3) & E y2 A x5 E y4 F(x5,y2,y4)";
inline const std::vector<const char*> kCopyNeededPrefix = {
    "y1", "y2", "x4", "y3", "x5", "y4", "x1_1", "x1_2", "x2_1", "x2_2", "x3_1", "x3_2", "x6_1", "x6_2", "x7_1", "x7_2"};
inline const std::vector<std::pair<const char*, const char*>> kCopyNeededSubstitutions = {
    {"x4", "y0"},   {"x5", "y0"},   {"x1_1", "y1"}, {"x1_2", "y2"}, {"x2_1", "y0"}, {"x2_2", "y1"},
    {"x3_1", "y2"}, {"x3_2", "y0"}, {"x6_1", "y3"}, {"x6_2", "y0"}, {"x7_1", "y0"}, {"x7_2", "y4"},
};

} // namespace nnfc::golden
