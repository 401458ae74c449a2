#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "helpers.hpp"
#include "hurwitz/eisenstein.hpp"
#include "hurwitz/quaternion.hpp"

namespace hurwitz {
namespace {

using testing::random_hurwitz;

TEST(HurwitzInt, RejectsMixedParity) {
  EXPECT_THROW(HurwitzInt::from_doubled({1, 0, 1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(HurwitzInt::from_doubled({1, -1, 3, 1}));
  EXPECT_NO_THROW(HurwitzInt::from_doubled({2, 0, -4, 6}));
}

TEST(HurwitzInt, UnitRelations) {
  const auto w = HurwitzInt::w();
  const auto one = HurwitzInt::one();
  EXPECT_EQ(w * w, w - one);
  EXPECT_EQ(w * w * w, -one);
  auto p = one;
  for (int i = 0; i < 6; ++i) p = p * w;
  EXPECT_EQ(p, one);
  EXPECT_EQ(w.norm(), 1);
  EXPECT_EQ(HurwitzInt::e1() * HurwitzInt::e2(), HurwitzInt::e3());
  EXPECT_EQ(HurwitzInt::e2() * HurwitzInt::e1(), -HurwitzInt::e3());
  EXPECT_EQ(HurwitzInt::e1() * HurwitzInt::e1(), -one);
}

TEST(HurwitzInt, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_hurwitz(rng, 20);
    const auto b = random_hurwitz(rng, 20);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    EXPECT_EQ(a * a.conjugate(), HurwitzInt::scalar(a.norm()));
  }
}

TEST(HurwitzInt, RingAxioms) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_hurwitz(rng, 10);
    const auto b = random_hurwitz(rng, 10);
    const auto c = random_hurwitz(rng, 10);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b).conjugate(), b.conjugate() * a.conjugate());
    EXPECT_EQ(a - a, HurwitzInt{});
  }
}

TEST(HurwitzInt, Formatting) {
  EXPECT_EQ(HurwitzInt::from_integers(1, 2, 2, 2).to_string(), "1+2e1+2e2+2e3");
  EXPECT_EQ(HurwitzInt::from_doubled({-1, 1, -1, -1}).to_string(), "(-1+e1-e2-e3)/2");
  EXPECT_EQ(HurwitzInt{}.to_string(), "0");
  EXPECT_EQ((-HurwitzInt::e2()).to_string(), "-e2");
}

TEST(HurwitzInt, OverflowIsAnError) {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2;
  const auto q = HurwitzInt::from_integers(big / 2, 0, 0, 0);
  EXPECT_THROW(q * q, std::overflow_error);
  EXPECT_THROW(q + q + q + q + q, std::overflow_error);
}

TEST(LipschitzUnit, InverseAndNegation) {
  for (auto u : kLipschitzUnits) {
    EXPECT_EQ(to_hurwitz(u) * to_hurwitz(unit_inverse(u)), HurwitzInt::one()) << to_string(u);
    EXPECT_EQ(to_hurwitz(unit_negate(u)), -to_hurwitz(u));
    EXPECT_EQ(to_hurwitz(u).norm(), 1);
  }
}

TEST(FiveCoordRep, Embedding) {
  EXPECT_EQ((FiveCoordRep{{0, 0, 0, 0, 1}}.to_hurwitz()), HurwitzInt::w());
  EXPECT_EQ((FiveCoordRep{{1, 2, 2, 2, 0}}.to_hurwitz()), HurwitzInt::from_integers(1, 2, 2, 2));
  EXPECT_EQ((FiveCoordRep{{-1, 0, 0, 0, 1}}.l1_norm()), 2);
}

TEST(RightDivision, ExactQuotients) {
  const auto pi = HurwitzInt::from_integers(1, 2, 2, 2);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto d = HurwitzInt::from_integers(static_cast<std::int64_t>(rng() % 9) - 4, 1, -2,
                                             static_cast<std::int64_t>(rng() % 5));
    const auto q = right_div_exact(d * pi, pi);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, d);
  }
  EXPECT_FALSE(right_div_exact(HurwitzInt::one(), pi).has_value());
  EXPECT_THROW(right_div_exact(HurwitzInt::one(), HurwitzInt{}), std::invalid_argument);
}

TEST(EisensteinInt, EmbeddingIsARingMap) {
  for (std::int64_t a = -4; a <= 4; ++a) {
    for (std::int64_t b = -4; b <= 4; ++b) {
      const EisensteinInt x{a, b};
      EXPECT_EQ(x.norm(), x.to_hurwitz().norm());
      EXPECT_EQ(x.conjugate().to_hurwitz(), x.to_hurwitz().conjugate());
      EXPECT_EQ(EisensteinInt::from_hurwitz(x.to_hurwitz()), x);
      const EisensteinInt y{b - 1, a + 2};
      EXPECT_EQ((x * y).to_hurwitz(), x.to_hurwitz() * y.to_hurwitz());
      EXPECT_EQ((x + y).to_hurwitz(), x.to_hurwitz() + y.to_hurwitz());
    }
  }
  EXPECT_EQ((EisensteinInt{-1, 4}).to_hurwitz(), HurwitzInt::from_integers(1, 2, 2, 2));
  EXPECT_EQ((EisensteinInt{-1, 6}).to_hurwitz(), HurwitzInt::from_integers(2, 3, 3, 3));
  EXPECT_FALSE(EisensteinInt::from_hurwitz(HurwitzInt::e1()).has_value());
}

}  // namespace
}  // namespace hurwitz
