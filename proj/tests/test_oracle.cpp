#include "nnfc/oracle.hpp"

#include "support/golden.hpp"
#include "support/random_psi.hpp"

#include <gtest/gtest.h>

using namespace nnfc;

TEST(Skolem, OccursCheckDecides)
{
    EXPECT_EQ(skolem_decide(parse("A x1 E y1 (F(x1,y1) & ~F(y1,x1))")), SkolemVerdict::Satisfiable);
    EXPECT_EQ(skolem_decide(parse(golden::kSplitInput)), SkolemVerdict::Contradictory);
    EXPECT_EQ(skolem_decide(parse(golden::kNoOptimalPrenex)), SkolemVerdict::Satisfiable);
    EXPECT_EQ(skolem_decide(parse(golden::kGroundPair)), SkolemVerdict::Contradictory);
}

TEST(Models, EvalAndSearch)
{
    Formula f = parse("A x1 E y1 (F(x1,y1) & ~F(y1,x1))");
    EXPECT_FALSE(find_model(f, 2));
    auto m = find_model(f, 3);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->size, 3);
    EXPECT_TRUE(model_eval(f, *m));
    EXPECT_FALSE(find_model(parse(golden::kGroundPair), 2));
}

TEST(Models, IndexMatchesTables)
{
    Formula f = parse("E y1 F(y1,y1)");
    Model m = model_at(f, 2, 0b1001);
    EXPECT_TRUE(m.holds("F", {0, 0}));
    EXPECT_FALSE(m.holds("F", {0, 1}));
    EXPECT_TRUE(m.holds("F", {1, 1}));
}

TEST(Models, EquivalenceAndDifference)
{
    Formula a = parse("A x1 (F(x1) & G(x1))");
    Formula b = parse("A x1 F(x1) & A x2 G(x2)");
    EXPECT_TRUE(models_equivalent(a, b, 2));
    Formula c = parse("E y1 F(y1)");
    Formula d = parse("A x1 F(x1)");
    EXPECT_FALSE(models_equivalent(c, d, 2));
    auto diff = find_difference(c, d, 2);
    ASSERT_TRUE(diff);
    EXPECT_NE(model_eval(c, *diff), model_eval(d, *diff));
    EXPECT_TRUE(small_models_agree(c, d, 2));
}

TEST(Models, BudgetIsEnforced)
{
    // no model of size 1, and size 2 already has 2^32 candidates
    Formula f = parse("A x1 A x2 A x3 A x4 A x5 F(x1,x2,x3,x4,x5) & E y1 ~F(y1,y1,y1,y1,y1)");
    EXPECT_THROW(find_model(f, 2, 1000), BudgetExceeded);
}

TEST(Kernels, ScalarAndVectorAgreeWithEvaluation)
{
    for (const auto& psi : nnfc::testing::random_corpus(41, 100, {5, 3})) {
        for (int size = 1; size <= 2; ++size) {
            auto scalar = truth_vector(psi, size, KernelKind::Scalar);
            for (std::uint64_t i = 0; i < scalar.size(); i += 1 + scalar.size() / 64)
                EXPECT_EQ(scalar[i], model_eval(psi, model_at(psi, size, i))) << psi.str();
            if (avx2_kernel_available())
                EXPECT_EQ(truth_vector(psi, size, KernelKind::Avx2), scalar) << psi.str();
        }
    }
}

TEST(Kernels, Naming)
{
    std::string name = active_kernel_name();
    EXPECT_TRUE(name == "scalar" || name == "avx2");
}
