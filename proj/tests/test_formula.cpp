#include "nnfc/formula.hpp"
#include "nnfc/oracle.hpp"

#include "support/random_psi.hpp"

#include <gtest/gtest.h>

using namespace nnfc;

TEST(Var, ParsesIndexedNames)
{
    auto v = parse_var("y1_2_3");
    ASSERT_TRUE(v);
    EXPECT_TRUE(v->is_existential());
    EXPECT_EQ(v->base, 1);
    EXPECT_EQ(v->subs, (std::vector<std::uint32_t>{2, 3}));
    EXPECT_EQ(v->str(), "y1_2_3");
    EXPECT_EQ(v->root(), Var::y(1));
    EXPECT_TRUE(parse_var("y0")->is_y0());
    EXPECT_EQ(Var::x(4).with_sub(1).str(), "x4_1");
}

TEST(Var, OrdersByLetterThenIndices)
{
    EXPECT_LT(Var::x(1), Var::x(2));
    EXPECT_LT(Var::x(1), Var::x(1, {1}));
    EXPECT_LT(Var::x(9), Var::y(1));
}

TEST(Parse, RoundTripsPrintedForm)
{
    for (const char* text : {
             "A x1 E y1 (F(x1,y1) & ~F(y1,x1))",
             "E y1 (A x1 A x2 F(x1,x2,y1,y1) & A x3 E y2 E y3 ~F(y2,y3,x3,y1))",
             "A x1 (A x2 A x6 F(x1,x2,x6) | A x3 A x7 ~F(x3,x1,x7))",
             "E y1 (F(y1) & ~F(y1))",
         }) {
        Formula f = parse(text);
        EXPECT_EQ(f.str(), text);
        EXPECT_EQ(parse(f.str()), f);
    }
}

TEST(Parse, RandomFormulasRoundTrip)
{
    for (const auto& f : nnfc::testing::random_corpus(11, 300))
        EXPECT_EQ(parse(f.str()), f) << f.str();
}

TEST(Parse, ReportsPosition)
{
    try {
        parse("A x1 (F(x1) &");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_GT(e.column(), 1);
    }
    EXPECT_THROW(parse("F(x1)"), ParseError); // not closed
    EXPECT_NO_THROW(parse("F(x1)", {false, false}));
}

TEST(Tree, PathsAndLiterals)
{
    Formula f = parse("A x1 E y1 (F(x1,y1) & ~G(y1))");
    EXPECT_EQ(subformula_at(f, {0, 0, 1}).str(), "~G(y1)");
    EXPECT_TRUE(has_path(f, {0, 0, 0}));
    EXPECT_FALSE(has_path(f, {0, 0, 2}));
    auto lits = literals(f);
    ASSERT_EQ(lits.size(), 2u);
    EXPECT_EQ(lits[0].polarity, Polarity::Pos);
    EXPECT_EQ(lits[1].polarity, Polarity::Neg);
    EXPECT_EQ(lits[1].pred, "G");
    EXPECT_EQ(quantifier_count(f), 2u);
    EXPECT_EQ(predicates(f), (std::set<std::string>{"F", "G"}));
    Formula g = replace_at(f, {0, 0, 1}, parse("G(y1)", {false, false}));
    EXPECT_EQ(g.str(), "A x1 E y1 (F(x1,y1) & G(y1))");
}

TEST(NormalForms, NnfPushesNegationToAtoms)
{
    Formula f = parse("~(A x1 F(x1) & E y1 ~G(y1))");
    Formula n = to_nnf(f);
    EXPECT_TRUE(is_nnf(n));
    EXPECT_TRUE(models_equivalent(f, n, 2));
}

TEST(NormalForms, RectifyRenamesApart)
{
    Formula f = parse("A x1 F(x1) & A x1 ~F(x1)");
    EXPECT_FALSE(is_rectified(f));
    Formula r = rectify(f);
    EXPECT_TRUE(is_rectified(r));
    EXPECT_TRUE(models_equivalent(f, r, 2));
    Formula canonical = parse("A x1 E y1 (F(x1,y1) & ~F(y1,x1))");
    EXPECT_EQ(rectify(canonical), canonical);
}

TEST(NormalForms, DisjunctSplitIsEquivalent)
{
    Formula f = rectify(to_nnf(parse("E y1 (F(y1) | ~G(y1)) & A x1 G(x1)")));
    auto parts = to_foldnf(f);
    ASSERT_FALSE(parts.empty());
    for (const auto& p : parts)
        EXPECT_TRUE(is_rectified(p)) << p.str();
    EXPECT_TRUE(models_equivalent(f, or_all(parts), 2));
}

TEST(Compare, AcAndAlpha)
{
    EXPECT_TRUE(equal_modulo_ac(parse("E y1 E y2 (F(y1) & ~F(y2))"), parse("E y2 E y1 (~F(y2) & F(y1))")));
    EXPECT_FALSE(equal_modulo_ac(parse("E y1 A x1 F(x1,y1)"), parse("A x1 E y1 F(x1,y1)")));
    EXPECT_TRUE(alpha_equal(parse("A x1 F(x1)"), parse("A x7 F(x7)")));
    EXPECT_FALSE(alpha_equal(parse("A x1 F(x1)"), parse("A x1 ~F(x1)")));
}

TEST(Compare, DnfMatrixOfPrenex)
{
    DnfMatrix m = dnf_matrix(parse("A x1 E y1 (F(x1) | G(y1) & ~F(y1))"));
    EXPECT_EQ(m.prefix.size(), 2u);
    EXPECT_EQ(m.matrix.size(), 2u);
}
