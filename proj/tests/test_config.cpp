#include <gtest/gtest.h>

#include <cstdlib>

#include "qsp/config.hpp"

using namespace qsp;

TEST(Config, ParsesKeyValueText) {
  RunConfig cfg;
  apply_config_text(cfg, "# caps\norder = 8\nq_value=1/3\nweyl_cap = 1152 # F4\nformat=text\nworkers=2\nseed=7\n");
  EXPECT_EQ(cfg.order, 8);
  EXPECT_EQ(cfg.q_value, Rational(1, 3));
  EXPECT_EQ(cfg.weyl_cap, 1152u);
  EXPECT_EQ(cfg.format, OutputFormat::Text);
  EXPECT_EQ(cfg.workers, 2u);
  EXPECT_EQ(cfg.seed, 7u);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  RunConfig cfg;
  EXPECT_THROW(apply_config_text(cfg, "colour=red\n"), ParseError);
  EXPECT_THROW(apply_config_text(cfg, "order=0\n"), ParseError);
  EXPECT_THROW(apply_config_text(cfg, "order\n"), ParseError);
  EXPECT_THROW(apply_config_text(cfg, "format=xml\n"), ParseError);
  try {
    apply_config_text(cfg, "order=3\nworkers=x\n", "run.cfg");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("run.cfg:2"), std::string::npos);
  }
}

TEST(Config, Rationals) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("half"), ParseError);
}

TEST(Config, EnvironmentNamesThePathOnly) {
  setenv("QSP_CONFIG", "/tmp/some.cfg", 1);
  EXPECT_EQ(config_path_from_env().value_or(""), "/tmp/some.cfg");
  setenv("QSP_CONFIG", "", 1);
  EXPECT_FALSE(config_path_from_env().has_value());
  unsetenv("QSP_CONFIG");
}
