#include <gtest/gtest.h>

#include "grassmann/cli_support.hpp"

using namespace grassmann;

namespace {

Context logistic() { return Context({"a", "b"}, Derivation::parse({"D(a) = a*(1-a)", "D(b) = b^2 + 1"}, {"a", "b"})); }

}  // namespace

TEST(Tensor, WedgeIsAntisymmetric) {
  Context ctx = logistic();
  RationalFunction a = ctx.parse("a"), b = ctx.parse("b");
  TensorElement t(wedge(2)), u(wedge(2));
  t.add(ctx, FieldCoeff(1), {a, b});
  u.add(ctx, FieldCoeff(-1), {b, a});
  EXPECT_TRUE(equals(ctx, t, u));
  TensorElement aa(wedge(2));
  aa.add(ctx, FieldCoeff(1), {a, a});
  EXPECT_TRUE(aa.is_zero(ctx));
}

TEST(Tensor, MultiplicativeLegsAndTorsion) {
  Context ctx = logistic();
  RationalFunction a = ctx.parse("a"), b = ctx.parse("b");
  TensorElement prod(field_wedge(1)), sum(field_wedge(1)), minus(field_wedge(1));
  prod.add(ctx, FieldCoeff(1), {a * b});
  sum.add(ctx, FieldCoeff(1), {a});
  sum.add(ctx, FieldCoeff(1), {b});
  EXPECT_TRUE(equals(ctx, prod, sum));
  minus.add(ctx, FieldCoeff(1), {RationalFunction(-1)});
  EXPECT_TRUE(minus.is_zero(ctx));
}

TEST(Tensor, ScalarRatio) {
  Context ctx = logistic();
  TensorElement t(field_wedge(1));
  t.add(ctx, FieldCoeff(1), {ctx.parse("a+1")});
  auto r = scalar_ratio(ctx, t.scaled(-4), t);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, mpq_class(-4));
  EXPECT_EQ(serialize(ctx, TensorElement(wedge(2))), "Wedge2\n0\n");
}

TEST(Relators, FiveTermVanishesUnderDelta) {
  Context ctx = logistic();
  Relator r = make_relator(ctx, "five_term_B2", {ctx.parse("a"), ctx.parse("b")});
  EXPECT_TRUE(delta2(ctx, r.b2).is_zero(ctx));
}

TEST(Relators, WeightTwoRelationsVanish) {
  Context ctx = logistic();
  for (const char* name : {"five_term_betaD", "four_term_beta2"}) {
    Relator r = make_relator(ctx, name, {ctx.parse("a"), ctx.parse("b")});
    EXPECT_TRUE(partial2(ctx, r.beta).is_zero(ctx)) << name;
  }
  for (const char* name : {"two_term", "inversion", "two_term_beta2", "inversion_beta2", "distribution2", "distribution2_D"}) {
    Relator r = make_relator(ctx, name, {ctx.parse("a")});
    EXPECT_TRUE(partial2(ctx, r.beta).is_zero(ctx)) << name;
  }
}

TEST(Relators, MixedDistributionIsNotARelation) {
  Context ctx = logistic();
  Relator r = make_relator(ctx, "distribution2_mixed", {ctx.parse("a")});
  EXPECT_FALSE(partial2(ctx, r.beta).is_zero(ctx));
}

TEST(Relators, WeightThreeRelationsVanishInBothTiers) {
  Context ctx = logistic();
  for (const char* name : {"three_term_beta3", "inversion_beta3", "distribution3"}) {
    MidElement m = partial3(ctx, make_relator(ctx, name, {ctx.parse("a")}).beta);
    EXPECT_TRUE(mid_left_tensor(ctx, m).is_zero(ctx)) << name;
    EXPECT_TRUE(mid_right_wedge(ctx, m).is_zero(ctx)) << name;
  }
}

TEST(Relators, SignFlippedInversionFails) {
  Context ctx = logistic();
  RationalFunction a = ctx.parse("a");
  BetaElement e(3);
  e.add(Kind::Plain, a, FieldCoeff(1));
  e.add(Kind::Plain, a.inverse(), FieldCoeff::value(ctx, a));
  MidElement m = partial3(ctx, e);
  EXPECT_FALSE(mid_left_tensor(ctx, m).is_zero(ctx) && mid_right_wedge(ctx, m).is_zero(ctx));
}

TEST(Relators, ArgumentsAvoidZeroAndOne) {
  BetaElement e(2);
  EXPECT_THROW(e.add(Kind::D, RationalFunction(1), FieldCoeff(1)), DegenerateArgument);
  Context ctx = logistic();
  EXPECT_THROW(make_relator(ctx, "no_such", {}), std::invalid_argument);
}

TEST(Relators, PartialSquaresToZero) {
  Context ctx = logistic();
  BetaElement e(3);
  e.add(Kind::D, ctx.parse("(a+2)/(b-3)"), FieldCoeff::value(ctx, ctx.parse("b")));
  e.add(Kind::Plain, ctx.parse("a*b+5"), FieldCoeff::value(ctx, ctx.parse("a-1")));
  EXPECT_TRUE(partial_mid(ctx, partial3(ctx, e)).is_zero(ctx));
}
