#include <gtest/gtest.h>

#include <random>

#include "grassmann/cli_support.hpp"

using namespace grassmann;

namespace {

RationalFunction rf(const char* s, std::size_t k = 2) { return parse_rational_function(s, default_variable_names(k)); }

Configuration points(const char* text, std::size_t k = 2) {
  return Configuration(parse_points(text, default_variable_names(k)));
}

}  // namespace

TEST(Configuration, DeterminantSignFollowsOrder) {
  Configuration c = points("[[1,0,0],[0,t1,0],[0,0,2]]");
  EXPECT_EQ(c.determinant({0, 1, 2}), rf("2*t1"));
  EXPECT_EQ(c.determinant({1, 0, 2}), rf("-2*t1"));
  EXPECT_TRUE(c.determinant({0, 0, 2}).is_zero());
}

TEST(Configuration, PermutationSign) {
  EXPECT_EQ(Permutation({1, 0, 2}).sign(), -1);
  EXPECT_EQ(Permutation({1, 2, 0}).sign(), 1);
  EXPECT_EQ(symmetric_group(5).size(), 120u);
  Permutation a({1, 2, 0}), b({0, 2, 1});
  EXPECT_EQ((a * b)(1), a(b(1)));
}

TEST(Configuration, CrossRatioOfStandardFrame) {
  Configuration c = points("[[0,1],[1,0],[1,1],[t1,1]]");
  EXPECT_EQ(cross_ratio(c), rf("t1"));
}

TEST(Configuration, BoundariesSquareToZero) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Configuration c = random_configuration(rng, 6, 3, 2);
    EXPECT_TRUE(boundary_d(boundary_d(c)).empty());
    EXPECT_TRUE(boundary_dprime(boundary_dprime(c)).empty());
    EXPECT_TRUE((boundary_d(boundary_dprime(c)) + boundary_dprime(boundary_d(c))).empty());
  }
}

TEST(Configuration, ProjectionLowersDimension) {
  std::mt19937_64 rng(3);
  Configuration c = random_configuration(rng, 5, 3, 2);
  Configuration p = c.project(0);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(projected_cross_ratio(c, 0), cross_ratio(p));
}

TEST(Configuration, GenericityRejection) {
  Configuration c = points("[[1,0],[0,1],[1,1],[2,2]]");
  EXPECT_FALSE(c.is_generic());
  EXPECT_THROW(tau1_2(c), NonGenericConfiguration);
}

TEST(Configuration, TripleRatioFactorsAndSymmetries) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Configuration c = random_configuration(rng, 6, 3, 2);
    RationalFunction r = triple_ratio_term(c);
    for (auto pair : {std::pair{1, 2}, std::pair{0, 2}, std::pair{0, 1}}) {
      auto [p, q] = factor_triple_ratio(c, pair);
      EXPECT_EQ(p / q, r);
    }
    EXPECT_EQ(triple_ratio_term(c.relabeled(Permutation({1, 2, 0, 4, 5, 3}))), r);
    EXPECT_EQ(triple_ratio_term(c.relabeled(Permutation({0, 2, 1, 3, 5, 4}))), r.inverse());
  }
}
