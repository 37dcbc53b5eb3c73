#include <gtest/gtest.h>

#include <random>

#include "grassmann/exact/coprime_base.hpp"
#include "grassmann/exact/parse.hpp"

using namespace grassmann;

namespace {

const std::vector<std::string> kNames = default_variable_names(3);

RationalFunction rf(const char* s) { return parse_rational_function(s, kNames); }
Polynomial poly(const char* s) {
  RationalFunction f = rf(s);
  EXPECT_TRUE(f.is_polynomial());
  return f.numerator().scaled(1 / f.denominator().constant_value());
}

Polynomial random_poly(std::mt19937_64& rng, int terms, int maxdeg, int vars) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg), var(0, vars - 1);
  std::vector<Polynomial::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < vars; ++v) m.set(std::size_t(v), unsigned(deg(rng) / 2));
    ts.push_back({m, mpq_class(coef(rng))});
  }
  return Polynomial::from_terms(ts);
}

}  // namespace

TEST(Polynomial, ArithmeticAndOrder) {
  Polynomial p = poly("(t1 + 1)*(t1 - 1)");
  EXPECT_EQ(p, poly("t1^2 - 1"));
  EXPECT_EQ(to_string(p, kNames), "t1^2 - 1");
  EXPECT_EQ(poly("t1*t2 + t1^2 + 3").leading_monomial(), Monomial::variable(0, 2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(*p.divide_exact(poly("t1 - 1")), poly("t1 + 1"));
  EXPECT_FALSE(p.divide_exact(poly("t1 - 2")).has_value());
  EXPECT_EQ(poly("t1^3*t2").derivative(0), poly("3*t1^2*t2"));
}

TEST(Polynomial, ExponentOverflowThrows) {
  Polynomial p = Polynomial::monomial(Monomial::variable(0, 60000), 1);
  EXPECT_THROW(p * p, std::overflow_error);
}

TEST(Gcd, KnownCases) {
  EXPECT_EQ(polynomial_gcd(poly("t1^2 - 1"), poly("t1^2 + 2*t1 + 1")), poly("t1 + 1"));
  EXPECT_EQ(polynomial_gcd(poly("6*t1*t2 + 6*t2"), poly("4*t1^2 - 4")), poly("t1 + 1"));
  EXPECT_EQ(polynomial_gcd(poly("t1 + t2"), poly("t1 - t2")), Polynomial(1));
  EXPECT_EQ(polynomial_gcd(poly("(t1*t2 - t3)^2*(t1 + 3)"), poly("(t1*t2 - t3)*(t2 + t3)")), poly("t1*t2 - t3"));
}

TEST(Gcd, RandomCommonFactors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial g = random_poly(rng, 3, 4, 3), a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial got = polynomial_gcd(g * a, g * b);
    // gcd must be divisible by g and divide both products
    EXPECT_TRUE(got.divide_exact(g.primitive()).has_value() || g.is_constant());
    EXPECT_TRUE((g * a).divide_exact(got).has_value());
    EXPECT_TRUE((g * b).divide_exact(got).has_value());
    Polynomial ca = *(g * a).divide_exact(got), cb = *(g * b).divide_exact(got);
    EXPECT_TRUE(polynomial_gcd(ca, cb).is_constant());
  }
}

TEST(RationalFunction, Normalize) {
  RationalFunction f = RationalFunction::normalize(poly("t1^2 - 1"), poly("t1 - 1"));
  EXPECT_EQ(f, rf("t1 + 1"));
  EXPECT_TRUE(f.is_polynomial());
  RationalFunction g = RationalFunction::normalize(poly("2*t1"), Polynomial(4));
  EXPECT_EQ(to_string(g, kNames), "t1/2");
  EXPECT_EQ(RationalFunction::normalize(poly("t1"), poly("-t2")), rf("-t1/t2"));
  EXPECT_THROW(RationalFunction::normalize(poly("t1"), Polynomial()), DivisionByZero);
  EXPECT_THROW(rf("1/(t1 - t1)"), DivisionByZero);
  EXPECT_EQ(RationalFunction::normalize(Polynomial(), poly("t1")), RationalFunction());
}

TEST(RationalFunction, DerivativeAndEvaluation) {
  RationalFunction f = rf("1/(1 - t1)");
  EXPECT_EQ(f.derivative(0), rf("1/(1 - t1)^2"));
  std::vector<mpq_class> pt{mpq_class(1, 2), 0, 0};
  EXPECT_EQ(f.evaluate(pt), 2);
  std::vector<mpq_class> pole{1, 0, 0};
  EXPECT_THROW(f.evaluate(pole), PoleError);
  try {
    f.evaluate(pole);
  } catch (const PoleError& e) {
    EXPECT_STREQ(e.what(), "specialization hits pole");
  }
}

TEST(RationalFunction, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto pick = [&] {
      Polynomial n = random_poly(rng, 3, 3, 2), d = random_poly(rng, 2, 3, 2);
      if (n.is_zero()) n = Polynomial(1);
      if (d.is_zero()) d = Polynomial(2);
      return RationalFunction::normalize(n, d);
    };
    RationalFunction a = pick(), b = pick(), c = pick();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - a), RationalFunction());
    EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    EXPECT_EQ(parse_rational_function(to_string(a, kNames), kNames), a);
  }
}

TEST(Parser, Errors) {
  EXPECT_THROW(rf("t9 + 1"), ParseError);
  EXPECT_THROW(rf("(t1 + 1"), ParseError);
  EXPECT_EQ(rf("2t1 + 3(t2 - 1)"), rf("2*t1 + 3*t2 - 3"));
  EXPECT_EQ(rf("t1^-2"), rf("1/t1^2"));
  EXPECT_EQ(rf("0.25"), rf("1/4"));
}

TEST(CoprimeBase, SplitsSharedFactors) {
  CoprimeBase base;
  base.factor(poly("t1^2 - 1"));
  Legs l = base.factor(poly("t1 - 1"));
  auto alive = base.alive_atoms();
  ASSERT_EQ(alive.size(), 2u);
  std::vector<Polynomial> vals;
  for (int a : alive) vals.push_back(base.atom(a).value);
  EXPECT_NE(std::find(vals.begin(), vals.end(), poly("t1 - 1")), vals.end());
  EXPECT_NE(std::find(vals.begin(), vals.end(), poly("t1 + 1")), vals.end());
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(base.atom(l.entries()[0].first).value, poly("t1 - 1"));
  Legs first = base.factor(poly("t1^2 - 1"));
  EXPECT_EQ(first.size(), 2u);
}

TEST(CoprimeBase, IntegersSplitIntoPrimes) {
  CoprimeBase base;
  base.factor(mpq_class(6));
  base.factor(mpq_class(10));
  std::vector<mpq_class> vals;
  for (int a : base.alive_atoms()) vals.push_back(base.atom(a).value.constant_value());
  std::sort(vals.begin(), vals.end());
  EXPECT_EQ(vals, (std::vector<mpq_class>{2, 3, 5}));
  mpz_class big("1000000007");
  Legs l = base.factor(mpq_class(big * big * 12, 5));
  EXPECT_EQ(base.value(l), RationalFunction(mpq_class(big * big * 12, 5)));
}

TEST(CoprimeBase, ValueRoundTripUpToSign) {
  std::mt19937_64 rng(3);
  CoprimeBase base;
  std::vector<RationalFunction> seen;
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(rng, 2, 2, 2), b = random_poly(rng, 2, 2, 2);
    if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) continue;
    RationalFunction f = RationalFunction::normalize(a * b * b, a + b + Polynomial(3));
    if (f.is_zero()) continue;
    seen.push_back(f);
    base.factor(f);
  }
  for (const auto& f : seen) {
    RationalFunction back = base.value(base.factor(f));
    EXPECT_TRUE(back == f || back == -f);
  }
  auto alive = base.alive_atoms();
  for (std::size_t i = 0; i < alive.size(); ++i)
    for (std::size_t j = i + 1; j < alive.size(); ++j)
      EXPECT_TRUE(polynomial_gcd(base.atom(alive[i]).value, base.atom(alive[j]).value).is_constant());
}
