#include "nnfc/decision.hpp"

#include "support/golden.hpp"

#include <gtest/gtest.h>

using namespace nnfc;

TEST(DecidePsi, WorkedRefutation)
{
    Decision d = decide_psi(parse(golden::kSplitInput));
    ASSERT_EQ(d.verdict, Verdict::Contradictory);
    EXPECT_EQ(d.witness, Witness::Refutation);
    ASSERT_TRUE(d.certificate);
    EXPECT_TRUE(verify_certificate(*d.certificate).verified);
    EXPECT_TRUE(equal_modulo_ac(d.certificate->final, parse(golden::kSplitFinal)));
    ASSERT_TRUE(d.stages);
    EXPECT_EQ(d.stages->sigma.str(), golden::kSplitSigma);
    ASSERT_TRUE(d.stages->chosen);
}

TEST(DecidePsi, GroundPairNeedsNoSteps)
{
    Decision d = decide_psi(parse(golden::kGroundPair));
    ASSERT_EQ(d.verdict, Verdict::Contradictory);
    EXPECT_TRUE(d.certificate->steps.empty());
}

TEST(DecidePsi, BlockedFormulas)
{
    for (const auto& [text, want] : golden::kBlocked) {
        Decision d = decide_psi(parse(text));
        EXPECT_EQ(d.verdict, Verdict::Satisfiable) << text;
        EXPECT_EQ(d.witness, want == golden::Expected::C1 ? Witness::C1 : Witness::C2) << text;
        EXPECT_FALSE(d.certificate);
    }
}

TEST(DecidePsi, UnconnectedIsSatisfiable)
{
    Decision d = decide_psi(parse("E y1 E y2 (F(y1) & ~G(y2))"));
    EXPECT_EQ(d.verdict, Verdict::Satisfiable);
    EXPECT_EQ(d.witness, Witness::NoConnectedPair);
}

TEST(DecideWedge, FirstRefutingPairWins)
{
    Decision d = decide_wedge_nnf(parse(golden::kTwoPairs));
    ASSERT_EQ(d.verdict, Verdict::Contradictory);
    ASSERT_EQ(d.pairs.size(), 2u);
    EXPECT_EQ(d.pairs[0].verdict, Verdict::Satisfiable);
    EXPECT_EQ(d.pairs[1].verdict, Verdict::Contradictory);
    EXPECT_TRUE(verify_certificate(*d.certificate).verified);
}

TEST(DecideWedge, SinglePairReportsItsWitness)
{
    Decision d = decide_wedge_nnf(parse(golden::kNoOptimalPrenex));
    EXPECT_EQ(d.witness, Witness::C2);
}

TEST(DecideWedge, IndirectCaseStillRefutes)
{
    EXPECT_EQ(decide_wedge_nnf(parse(golden::kIndirectCase)).verdict, Verdict::Contradictory);
}

TEST(DecideFoldnf, AllDisjunctsMustRefute)
{
    std::vector<Formula> both = {parse(golden::kGroundPair), parse(golden::kSplitInput)};
    EXPECT_EQ(decide_foldnf(both).verdict, Verdict::Contradictory);
    std::vector<Formula> one = {parse(golden::kGroundPair), parse(golden::kNoOptimalPrenex)};
    Decision d = decide_foldnf(one);
    EXPECT_EQ(d.verdict, Verdict::Satisfiable);
    EXPECT_EQ(d.disjuncts.size(), 2u);
}

TEST(Names, Stable)
{
    EXPECT_EQ(verdict_name(Verdict::Contradictory), "CONTRADICTORY");
    EXPECT_EQ(verdict_name(Verdict::Unknown), "UNKNOWN");
    EXPECT_EQ(witness_name(Witness::C1), "C1: ambiguous substitution list");
}
