#include <gtest/gtest.h>

#include <sstream>

#include "grassmann/cli_support.hpp"

using namespace grassmann;

TEST(Cli, ParsePoints) {
  auto pts = parse_points("[[1, t1], [0, 1/2], [t1+t2, -3]]", default_variable_names(2));
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1][1], RationalFunction(mpq_class(1, 2)));
  EXPECT_THROW(parse_points("[[1,2],[3,", {"t1"}), ParseError);
  EXPECT_THROW(parse_points("[[1,,2]]", {"t1"}), ParseError);
  EXPECT_THROW(parse_points("[]", {"t1"}), ParseError);
  EXPECT_THROW(parse_points("[[[1]]]", {"t1"}), ParseError);
}

TEST(Cli, RunConfigSections) {
  std::istringstream in("seed = 9  # global\ntrials=3\n[claim1]\ntrials = 7\ntol = 1e-20\n");
  RunConfig cfg = RunConfig::parse(in);
  EXPECT_EQ(cfg.global.at("seed"), "9");
  EXPECT_EQ(cfg.per_check.at("claim1").at("trials"), "7");
  CheckOptions o = apply_settings(apply_settings(CheckOptions{}, cfg.global), cfg.per_check.at("claim1"));
  EXPECT_EQ(o.seed, 9u);
  EXPECT_EQ(o.trials, 7);
  EXPECT_DOUBLE_EQ(o.tolerance, 1e-20);
}

TEST(Cli, RunConfigRejectsBadInput) {
  std::istringstream unknown("[nope]\n"), junk("seed 3\n"), bad("trials = many\n");
  EXPECT_THROW(RunConfig::parse(unknown), UnknownCheck);
  EXPECT_THROW(RunConfig::parse(junk), ParseError);
  RunConfig cfg = RunConfig::parse(bad);
  EXPECT_THROW(apply_settings(CheckOptions{}, cfg.global), ParseError);
}

TEST(Cli, DerivationSetting) {
  CheckOptions o;
  apply_setting(o, "derivation", "D(t1) = t1^2; D(t2) = 1");
  ASSERT_TRUE(o.derivation);
  EXPECT_EQ(o.derivation->size(), 2u);
}

TEST(Checks, UnknownIdListsAvailable) {
  try {
    run_check("no_such_check", CheckOptions{});
    FAIL();
  } catch (const UnknownCheck& e) {
    EXPECT_NE(std::string(e.what()).find("claim1"), std::string::npos);
  }
}

TEST(Checks, EveryStatementIsBound) {
  EXPECT_TRUE(audit_unbound().empty());
  EXPECT_EQ(all_check_ids().size(), check_catalog().size());
}

TEST(Checks, SeededRunsAreDeterministic) {
  CheckOptions o;
  o.seed = 123;
  o.trials = 3;
  auto a = run_checks({"gon5term", "lemma_4pt", "remark_alld_2"}, o);
  auto b = run_checks({"gon5term", "lemma_4pt", "remark_alld_2"}, o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].status, Status::Pass) << a[i].id << ": " << a[i].message;
    EXPECT_EQ(a[i].passed, b[i].passed);
    EXPECT_EQ(a[i].max_residual, b[i].max_residual);
    EXPECT_EQ(a[i].residual_count, b[i].residual_count);
  }
}

TEST(Checks, TrialSeedsDiffer) {
  EXPECT_NE(trial_seed(1, "claim1", 0), trial_seed(1, "claim1", 1));
  EXPECT_NE(trial_seed(1, "claim1", 0), trial_seed(1, "claim3a", 0));
  EXPECT_EQ(trial_seed(1, "claim1", 0), trial_seed(1, "claim1", 0));
}
