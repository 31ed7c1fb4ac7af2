#include <gtest/gtest.h>

#include "gradus/error.hpp"
#include "gradus/random.hpp"
#include "gradus/scalar.hpp"

namespace gradus {
namespace {

const FieldSpec F7 = FieldSpec::prime(7);
const FieldSpec Q = FieldSpec::rationals();

TEST(FieldSpec, ValidatesPrimes) {
  EXPECT_EQ(FieldSpec::prime(32003).characteristic(), 32003u);
  EXPECT_THROW(FieldSpec::prime(2), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(9), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(1ull << 31), PreconditionError);
  EXPECT_NO_THROW(FieldSpec::prime(2147483647));
  EXPECT_TRUE(FieldSpec::parse("Q").is_rational());
  EXPECT_EQ(FieldSpec::parse("101"), FieldSpec::prime(101));
  EXPECT_THROW(FieldSpec::parse("abc"), Error);
  EXPECT_EQ(FieldSpec::default_field().to_string(), "32003");
}

TEST(FieldArith, SmallPrimeExamples) {
  EXPECT_EQ(field_arith(Scalar(F7, 3), Scalar(F7, 5), ArithOp::kAdd), Scalar(F7, 1));
  EXPECT_EQ(field_arith(Scalar::one(F7), Scalar(F7, 3), ArithOp::kDiv), Scalar(F7, 5));
  EXPECT_EQ(Scalar(F7, 3).inverse(), Scalar(F7, 5));
  EXPECT_EQ(Scalar(F7, -1).residue(), 6u);
}

TEST(FieldArith, RationalExamples) {
  EXPECT_EQ(Scalar::parse(Q, "1/2") + Scalar::parse(Q, "1/3"), Scalar::parse(Q, "5/6"));
  EXPECT_EQ(Scalar::parse(Q, "2/4").to_string(), "1/2");
  EXPECT_EQ(Scalar::parse(Q, "3/-6").to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse(Q, "4/2").to_string(), "2");
}

TEST(FieldArith, FractionsInPrimeField) {
  const Scalar half = Scalar::parse(F7, "1/2");
  EXPECT_EQ(half * Scalar(F7, 2), Scalar::one(F7));
}

TEST(FieldArith, Errors) {
  EXPECT_THROW(field_arith(Scalar(F7, 1), Scalar::zero(F7), ArithOp::kDiv), DivisionByZero);
  EXPECT_THROW(Scalar::zero(Q).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(F7, 1) + Scalar(Q, 1), MismatchError);
  EXPECT_THROW(Scalar::parse(F7, "1/7"), DivisionByZero);
  EXPECT_THROW(Scalar::parse(Q, "1/0"), DivisionByZero);
  EXPECT_THROW(Scalar::parse(Q, "x"), ParseError);
}

TEST(FieldArith, SignedPrinting) {
  EXPECT_EQ(Scalar(F7, 6).to_signed_string(), "-1");
  EXPECT_EQ(Scalar(F7, 3).to_signed_string(), "3");
  EXPECT_TRUE(Scalar(F7, 4).prints_negative());
  for (std::int64_t v = 0; v < 7; ++v) {
    const Scalar s(F7, v);
    EXPECT_EQ(Scalar::parse(F7, s.to_signed_string()), s);
  }
}

class FieldAxioms : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const FieldSpec field = GetParam();
  Rng rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const Scalar a = random_scalar(field, rng);
    const Scalar b = random_scalar(field, rng);
    const Scalar c = random_scalar(field, rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Scalar::zero(field));
    if (!a.is_zero()) {
      ASSERT_EQ(a.inverse() * a, Scalar::one(field));
      ASSERT_EQ((b / a) * a, b);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(FieldSpec::prime(7), FieldSpec::default_field(),
                                           FieldSpec::prime(2147483647), FieldSpec::rationals()));

TEST(Rng, DeterministicAndBounded) {
  Rng a(5);
  Rng b(5);
  for (int k = 0; k < 100; ++k) {
    const auto x = a.below(13);
    EXPECT_EQ(x, b.below(13));
    EXPECT_LT(x, 13u);
    const auto y = a.between(-3, 3);
    b.between(-3, 3);
    EXPECT_GE(y, -3);
    EXPECT_LE(y, 3);
  }
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
}

}  // namespace
}  // namespace gradus
