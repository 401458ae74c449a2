#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

namespace hurwitz {
namespace {

using testing::field13;
using testing::field31;

TEST(PrimeModulus, RejectsBadNorms) {
  EXPECT_THROW(PrimeModulus::create({2, 0}), FieldError);   // norm 4
  EXPECT_THROW(PrimeModulus::create({1, 1}), FieldError);   // norm 3
  try {
    PrimeModulus::create({4, 1});  // norm 21
    FAIL();
  } catch (const FieldError& e) {
    EXPECT_EQ(e.kind(), FieldError::Kind::kNormNotPrime);
  }
  try {
    PrimeModulus::create({3, 2});  // norm 19, prime and 1 mod 6
  } catch (...) {
    FAIL();
  }
  try {
    PrimeModulus::create({2, 1});  // norm 7
  } catch (...) {
    FAIL();
  }
  try {
    PrimeModulus::create({3, 0});  // norm 9
    FAIL();
  } catch (const FieldError& e) {
    EXPECT_EQ(e.kind(), FieldError::Kind::kNormNotPrime);
  }
  try {
    PrimeModulus::create({1, 1});  // norm 3: prime, not 1 mod 6
    FAIL();
  } catch (const FieldError& e) {
    EXPECT_EQ(e.kind(), FieldError::Kind::kNormNotOneModSix);
  }
}

TEST(EisReduce, IdempotentAndCongruent) {
  const auto m = PrimeModulus::create({-1, 6});
  for (std::int64_t a = -40; a <= 40; a += 3) {
    for (std::int64_t b = -40; b <= 40; b += 5) {
      const EisensteinInt x{a, b};
      const auto r = eis_reduce(x, m);
      EXPECT_EQ(eis_reduce(r, m), r);
      EXPECT_TRUE(congruent(x, r, m));
      EXPECT_LT(r.norm(), m.p());
    }
  }
}

TEST(ResidueField, LengthAndElements) {
  EXPECT_EQ(field13()->p(), 13);
  EXPECT_EQ(field13()->n(), 2);
  EXPECT_EQ(field31()->p(), 31);
  EXPECT_EQ(field31()->n(), 5);
  for (const auto& f : {field13(), field31()}) {
    const auto els = f->elements();
    ASSERT_EQ(static_cast<std::int64_t>(els.size()), f->p());
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = i + 1; j < els.size(); ++j) {
        EXPECT_FALSE(congruent(els[i], els[j], f->modulus()));
      }
    }
  }
}

// A hand-picked small representative for each class modulo pi = -1+4w.
TEST(ResidueField, P13TableMatchesListedSet) {
  const std::vector<EisensteinInt> listed = {
      {0, 0},  {1, 0},  {-1, -1}, {0, -1}, {1, -1}, {2, -1}, {-1, 2},
      {1, -2}, {-2, 1}, {-1, 1},  {0, 1},  {1, 1},  {-1, 0},
  };
  const auto f = field13();
  std::set<EisensteinInt> hit;
  for (const auto& x : listed) {
    const auto r = f->reduce(x);
    EXPECT_TRUE(hit.insert(r).second) << "duplicate class " << x.to_string();
  }
  EXPECT_EQ(hit.size(), 13u);
  for (const auto& e : f->elements()) EXPECT_TRUE(hit.contains(e));
}

TEST(ResidueField, BetaIsPrimitive) {
  for (const auto& f : {field13(), field31()}) {
    std::set<EisensteinInt> seen;
    for (std::int64_t k = 0; k < f->p() - 1; ++k) {
      const auto x = f->beta_power(k);
      EXPECT_FALSE(x.is_zero());
      seen.insert(x);
      EXPECT_EQ(f->dlog(x), k);
    }
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), f->p() - 1);
    EXPECT_EQ(f->beta_power(f->p() - 1), f->from_int(1));
    EXPECT_EQ(f->beta_power(-1), f->inv(f->beta()));
    EXPECT_TRUE(f->tables_consistent());
  }
}

TEST(ResidueField, BetaToTheNIsPlusMinusW) {
  EXPECT_EQ(field13()->beta_power(2), field13()->reduce({0, field13()->beta_power_sign()}));
  EXPECT_EQ(field31()->beta_power(5), field31()->reduce({0, field31()->beta_power_sign()}));
}

TEST(ResidueField, ArithmeticIsAField) {
  const auto& f = *field31();
  for (const auto& x : f.elements()) {
    EXPECT_EQ(f.add(x, f.neg(x)), (EisensteinInt{0, 0}));
    if (x.is_zero()) {
      EXPECT_THROW(f.inv(x), std::domain_error);
      EXPECT_THROW(f.dlog(x), std::domain_error);
      continue;
    }
    EXPECT_EQ(f.mul(x, f.inv(x)), f.from_int(1));
    for (const auto& y : f.elements()) {
      if (!y.is_zero()) EXPECT_EQ(f.mul(f.div(x, y), y), x);
      EXPECT_EQ(f.mul(x, y), f.mul(y, x));
    }
  }
}

TEST(ResidueField, RejectsNonPrimitiveBeta) {
  try {
    ResidueField::build({-1, 4}, {1, 0});
    FAIL();
  } catch (const FieldError& e) {
    EXPECT_EQ(e.kind(), FieldError::Kind::kBetaNotPrimitive);
  }
  // A square in R_13 has order dividing 6.
  EXPECT_THROW(ResidueField::build({-1, 4}, {0, 1}), FieldError);
}

TEST(ResidueField, CorruptedTablesAreDetected) {
  const auto bad = field13()->with_corrupted_tables();
  EXPECT_FALSE(bad.tables_consistent());
  EXPECT_TRUE(field13()->tables_consistent());
}

TEST(RightCongruence, CanonicalClassIsStable) {
  std::mt19937_64 rng(21);
  const auto pi = field13()->modulus().quaternion();
  for (int i = 0; i < 3000; ++i) {
    const auto q = testing::random_hurwitz(rng, 30);
    const auto c = canonical_right_class(q, pi);
    EXPECT_TRUE(right_congruent(q, c, pi));
    EXPECT_EQ(canonical_right_class(c, pi), c);
    const auto delta = HurwitzInt::from_integers(static_cast<std::int64_t>(rng() % 7) - 3, 1, 0, -2);
    EXPECT_EQ(canonical_right_class(q + delta * pi, pi), c);
  }
}

TEST(LeftIdeal, FieldElementsReadBack) {
  const auto& f = *field31();
  const auto pi = f.modulus().quaternion();
  for (const auto& x : f.elements()) {
    EXPECT_EQ(f.from_hurwitz(x.to_hurwitz()), x);
    EXPECT_EQ(f.from_hurwitz(x.to_hurwitz() + HurwitzInt::w() * pi), x);
    EXPECT_EQ(f.from_hurwitz(x.to_hurwitz() + HurwitzInt::e1() * pi), x);
  }
  EXPECT_TRUE(in_left_ideal(HurwitzInt::e2() * pi, pi));
  EXPECT_FALSE(in_left_ideal(HurwitzInt::e2(), pi));
  EXPECT_FALSE(f.from_hurwitz(HurwitzInt::e1()).has_value());
}

}  // namespace
}  // namespace hurwitz
