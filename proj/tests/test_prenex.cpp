#include "nnfc/oracle.hpp"
#include "nnfc/prenex.hpp"

#include "support/golden.hpp"
#include "support/random_psi.hpp"

#include <gtest/gtest.h>

using namespace nnfc;

TEST(Sigma, PureXClusterGetsFreshVariable)
{
    auto s = substitution_list(pair_of(parse(golden::kSigmaPsi)));
    EXPECT_EQ(s.str(), golden::kSigmaExpected);
    EXPECT_FALSE(s.ambiguous());
    EXPECT_EQ(s.target(Var::x(4)), Var::y0());
    EXPECT_EQ(s.target(Var::x(1)), Var::y(2));
}

TEST(Sigma, Ambiguity)
{
    auto s = substitution_list(pair_of(parse(golden::kAmbiguous)));
    EXPECT_TRUE(s.ambiguous());
    EXPECT_ANY_THROW(s.target(Var::x(1)));
}

TEST(Sigma, TaggingSeparatesSharedVariables)
{
    ConnectedPair p = pair_of(parse("E y1 E y2 A x1 (F(x1,y1) & ~F(y2,x1))"));
    EXPECT_TRUE(substitution_list(p).ambiguous());
    EXPECT_FALSE(substitution_list(p, true).ambiguous());
}

TEST(Prenex, WorkedEnumeration)
{
    auto forms = enumerate_optimized_prenexes(parse(golden::kPrenexInput));
    ASSERT_EQ(forms.size(), 2u);
    EXPECT_EQ(forms[0].prefix_str(), golden::kPrenexFirst);
    EXPECT_EQ(forms[1].prefix_str(), golden::kPrenexSecond);
    auto sigma = substitution_list(pair_of(parse(golden::kPrenexInput)));
    EXPECT_FALSE(is_optimal(forms[0], sigma));
    EXPECT_TRUE(is_optimal(forms[1], sigma));
    EXPECT_EQ(optimal_prenexes(forms, sigma).size(), 1u);
}

TEST(Prenex, StepsReplayToForm)
{
    Formula psi = parse(golden::kPrenexInput);
    for (const auto& form : enumerate_optimized_prenexes(psi)) {
        Derivation d(psi);
        for (const auto& s : form.steps)
            d.apply(s.rule, s.position, {Direction::RightToLeft, std::nullopt, std::nullopt});
        EXPECT_EQ(d.current(), form.formula());
    }
}

TEST(Prenex, RejectsNonConjunctiveInput)
{
    EXPECT_THROW(enumerate_optimized_prenexes(parse("A x1 (F(x1) | ~F(x1))")), std::invalid_argument);
}

TEST(Prenex, FormsAreEquivalentAndBounded)
{
    for (const auto& psi : nnfc::testing::random_corpus(31, 200, {6, 3})) {
        Formula opt = em_optimize(psi);
        auto forms = enumerate_optimized_prenexes(opt);
        ASSERT_FALSE(forms.empty());
        EXPECT_LE(forms.size(), std::size_t{1} << quantifier_count(opt));
        for (const auto& f : forms)
            EXPECT_TRUE(models_equivalent(opt, f.formula(), 2)) << f.formula().str();
    }
}
