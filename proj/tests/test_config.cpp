#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hurwitz/config.hpp"
#include "hurwitz/notation.hpp"

namespace hurwitz {
namespace {

using testing::field31;

const char* kMinimal =
    "pi = (1, 2, 2, 2)\n"
    "beta = (-1, 2)\n"
    "rows = [1]\n"
    "error_model = R_pi\n";

TEST(Config, ParsesAllKeys) {
  const auto cfg = parse_config(
      "# comment\n"
      "pi = 2+3e1+3e2+3e3\n"
      "beta = -(5+e1+e2+e3)/2   # trailing comment\n"
      "rows = [1, 7, 13]\n"
      "error_model = H_pi\n"
      "seed = 42\n"
      "trials = 17\n"
      "caps = sweep=10, brute=20, batch=5\n"
      "format = records\n");
  EXPECT_EQ(cfg.pi, (EisensteinInt{-1, 6}));
  EXPECT_EQ(cfg.beta, (EisensteinInt{-2, -1}));
  EXPECT_EQ(cfg.rows, (std::vector<int>{1, 7, 13}));
  EXPECT_EQ(cfg.error_model, ErrorModel::kHurwitz);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.trials, 17u);
  EXPECT_EQ(cfg.caps.sweep, 10u);
  EXPECT_EQ(cfg.caps.brute, 20u);
  EXPECT_EQ(cfg.caps.batch, 5u);
  EXPECT_EQ(cfg.format, OutputFormat::kRecords);
  EXPECT_EQ(cfg.lines.at("rows"), 4);
}

TEST(Config, Defaults) {
  const auto cfg = parse_config(kMinimal);
  EXPECT_EQ(cfg.seed, 1u);
  EXPECT_EQ(cfg.trials, 1000u);
  EXPECT_EQ(cfg.format, OutputFormat::kTable);
  EXPECT_EQ(cfg.caps.brute, 1'000'000u);
}

void expect_config_error(const std::string& text, int line, const std::string& field) {
  try {
    parse_config(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.field(), field) << e.what();
  }
}

TEST(Config, ErrorsNameLineAndField) {
  const std::string base = kMinimal;
  expect_config_error(base + "seed = -3\n", 5, "seed");
  expect_config_error(base + "color = red\n", 5, "color");
  expect_config_error(base + "format = xml\n", 5, "format");
  expect_config_error(base + "caps = sweep\n", 5, "caps");
  expect_config_error(base + "caps = depth=3\n", 5, "caps");
  expect_config_error(base + "caps = batch=0\n", 5, "caps");
  expect_config_error(base + "pi = 1\n", 5, "pi");
  expect_config_error(base + "garbage\n", 5, "");
  expect_config_error("pi = (1, 2, 2, 2)\nbeta = (-1, 2)\nrows = [1]\n", 3, "error_model");
  expect_config_error("pi = e1\nbeta = (-1, 2)\nrows = [1]\nerror_model = R_pi\n", 1, "pi");
  expect_config_error("pi = (1,2,2,2)\nbeta = (-1, 2)\nrows = [1,x]\nerror_model = R_pi\n", 3, "rows");
  expect_config_error("pi = (1,2,2,2)\nbeta = (-1, 2)\nrows = [1]\nerror_model = Q\n", 4,
                      "error_model");
}

TEST(Config, ExtraKeysWhenAllowed) {
  const auto cfg = parse_config(std::string(kMinimal) + "received = 0, 1\n", true);
  EXPECT_EQ(cfg.extras.at("received"), "0, 1");
}

TEST(Config, BuildMapsFailuresToKeys) {
  const auto bad_beta = parse_config("pi = (1,2,2,2)\nbeta = 1\nrows = [1]\nerror_model = R_pi\n");
  try {
    build_from_config(bad_beta);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "beta");
    EXPECT_EQ(e.line(), 2);
  }
  const auto bad_pi = parse_config("pi = (3, 0)\nbeta = 1\nrows = [1]\nerror_model = R_pi\n");
  try {
    build_from_config(bad_pi);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "pi");
  }
  const auto bad_rows = parse_config("pi = (1,2,2,2)\nbeta = (-1,2)\nrows = [1,7,13]\nerror_model = R_pi\n");
  try {
    build_from_config(bad_rows);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "rows");
    EXPECT_EQ(e.line(), 3);
  }
  const auto built = build_from_config(parse_config(kMinimal));
  EXPECT_EQ(built.code.n(), 2);
}

TEST(Notation, Elements) {
  const auto& f = *field31();
  EXPECT_EQ(parse_element("1+2e1+2e2+2e3", nullptr), HurwitzInt::from_integers(1, 2, 2, 2));
  EXPECT_EQ(parse_element("(1+e1-e2-e3)/2", nullptr), HurwitzInt::from_doubled({1, 1, -1, -1}));
  EXPECT_EQ(parse_element("(1/2, 1/2, 1/2, 1/2)", nullptr), HurwitzInt::w());
  EXPECT_EQ(parse_element("(-1, 4)", nullptr), HurwitzInt::from_integers(1, 2, 2, 2));
  EXPECT_EQ(parse_element("w^2", nullptr), HurwitzInt::w() - HurwitzInt::one());
  EXPECT_EQ(parse_element("w^-1", nullptr), HurwitzInt::w().conjugate());
  EXPECT_EQ(parse_element("2 e1 e2", nullptr), HurwitzInt::from_integers(0, 0, 0, 2));
  EXPECT_EQ(parse_element("e2*b^15", &f), HurwitzInt::e2() * f.beta_power(15).to_hurwitz());
  EXPECT_EQ(parse_element("\xe2\x88\x92\xce\xb2", &f), -f.beta().to_hurwitz());
}

TEST(Notation, ElementErrors) {
  EXPECT_THROW(parse_element("", nullptr), NotationError);
  EXPECT_THROW(parse_element("b", nullptr), NotationError);
  EXPECT_THROW(parse_element("1/2", nullptr), NotationError);
  EXPECT_THROW(parse_element("(1+e1)/2", nullptr), NotationError);
  EXPECT_THROW(parse_element("e4", nullptr), NotationError);
  EXPECT_THROW(parse_element("(1, 2, 3)", nullptr), NotationError);
  EXPECT_THROW(parse_element("1/3", nullptr), NotationError);
  EXPECT_THROW(parse_element("(1", nullptr), NotationError);
  EXPECT_THROW(parse_element("1 $", nullptr), NotationError);
  EXPECT_THROW(parse_eisenstein("e1", nullptr), NotationError);
}

TEST(Notation, VectorsAndErrors) {
  const auto& f = *field31();
  const auto v = parse_vector("[0, (1, 2), b^3, -e1]", &f);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[1], (EisensteinInt{1, 2}).to_hurwitz());
  EXPECT_EQ(format_vector(std::vector<HurwitzInt>{{}, f.beta_power(3).to_hurwitz(), -HurwitzInt::e1()}, f),
            "(0, b^3, -e1)");
  const auto e = parse_errors("2: -e2; 4:e2*w^2", &f);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].location, 2);
  EXPECT_EQ(e[0].value, -HurwitzInt::e2());
  EXPECT_THROW(parse_errors("x:1", &f), NotationError);
  EXPECT_THROW(parse_errors("1", &f), NotationError);
  EXPECT_TRUE(parse_errors("  ", &f).empty());
}

}  // namespace
}  // namespace hurwitz
