#include <gtest/gtest.h>

#include "gradus/error.hpp"
#include "gradus/polynomial.hpp"
#include "oracles.hpp"

namespace gradus {
namespace {

using testing::P;
using testing::ring3;

TEST(PolyArith, Examples) {
  const RingSpec R = ring3();
  EXPECT_EQ(poly_arith(P(R, "x0+x1"), P(R, "x0-x1"), PolyOp::kMul), P(R, "x0^2-x1^2"));
  const Polynomial f = P(R, "3*x0*x2-x1^2+7");
  EXPECT_TRUE(poly_arith(f, -f, PolyOp::kAdd).is_zero());
  const RingSpec RQ = ring3(FieldSpec::rationals());
  const Polynomial s = P(RQ, "x0+x1+x2");
  EXPECT_EQ(s * s, P(RQ, "x0^2+x1^2+x2^2+2*x0*x1+2*x0*x2+2*x1*x2"));
}

TEST(PolyArith, RingMismatch) {
  EXPECT_THROW(P(ring3(), "x0") + P(ring3(FieldSpec::rationals()), "x0"), MismatchError);
  EXPECT_THROW(P(ring3(), "x0") * P(RingSpec::make(2, FieldSpec::default_field()), "x0"), MismatchError);
}

TEST(CompareMonomials, Examples) {
  const auto grevlex = TermOrder::grevlex();
  EXPECT_EQ(compare_monomials(Monomial{1, 0, 2}, Monomial{0, 2, 1}, grevlex), std::strong_ordering::less);
  EXPECT_EQ(compare_monomials(Monomial{1, 0, 0}, Monomial{0, 5, 5}, TermOrder::lex()),
            std::strong_ordering::greater);
  EXPECT_EQ(compare_monomials(Monomial{2, 1, 0}, Monomial{2, 1, 0}, grevlex), std::strong_ordering::equal);
  // higher degree first under grevlex
  EXPECT_EQ(compare_monomials(Monomial{0, 0, 3}, Monomial{2, 0, 0}, grevlex), std::strong_ordering::greater);
}

TEST(CompareMonomials, EliminationOrder) {
  const auto elim = TermOrder::elimination(1);
  // any monomial containing x0 beats one without it
  EXPECT_TRUE(elim.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
  EXPECT_TRUE(elim.greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
  EXPECT_EQ(TermOrder::parse("elim:2"), TermOrder::elimination(2));
  EXPECT_EQ(TermOrder::parse("lex"), TermOrder::lex());
  EXPECT_THROW(TermOrder::parse("deglex"), ParseError);
}

TEST(LeadingTerm, Examples) {
  const RingSpec R = ring3();
  auto [m1, c1] = leading_term(P(R, "x0^2+x1*x2"));
  EXPECT_EQ(m1, (Monomial{2, 0, 0}));
  EXPECT_TRUE(c1.is_one());
  const RingSpec L = R.with_order(TermOrder::lex());
  EXPECT_EQ(leading_term(P(L, "x1^5+x0*x2^4")).first, (Monomial{1, 0, 4}));
  EXPECT_EQ(leading_term(P(R, "x0^5")).first, (Monomial{5, 0, 0}));
  EXPECT_THROW(leading_term(Polynomial(R)), PreconditionError);
}

TEST(MonomialsOfDegree, Sizes) {
  const RingSpec R = ring3();
  EXPECT_EQ(monomials_of_degree(R, 0), (std::vector<Monomial>{Monomial{0, 0, 0}}));
  EXPECT_EQ(monomials_of_degree(R, 2).size(), 6u);
  EXPECT_EQ(monomials_of_degree(R, 5).size(), 21u);
  for (std::size_t nvars = 1; nvars <= 5; ++nvars) {
    const RingSpec ring = RingSpec::make(nvars, FieldSpec::default_field());
    for (unsigned d = 0; d <= 12; ++d) {
      const auto ms = monomials_of_degree(ring, d);
      ASSERT_EQ(ms.size(), binomial(nvars - 1 + d, nvars - 1));
      for (std::size_t k = 0; k < ms.size(); ++k) {
        ASSERT_EQ(ms[k].degree(), d);
        if (k > 0) {
          ASSERT_TRUE(ring.order.greater(ms[k - 1], ms[k]));
        }
      }
    }
  }
}

TEST(Parse, RoundTripAndErrors) {
  const RingSpec R = ring3();
  EXPECT_EQ(P(R, "x0^2+x1*x2-3*x2^2").to_string(), "x0^2+x1*x2-3*x2^2");
  EXPECT_EQ(P(R, " x1 * x0 + x0^2 ").to_string(), "x0^2+x0*x1");
  EXPECT_EQ(P(R, "0").to_string(), "0");
  EXPECT_EQ(P(R, "x0-x0").to_string(), "0");
  EXPECT_EQ(P(R, "-x0+0*x1").to_string(), "-x0");
  EXPECT_EQ(P(ring3(FieldSpec::rationals()), "3/2*x0-1/3").to_string(), "3/2*x0-1/3");
  for (const char* bad : {"x0+", "x3", "x0^", "2**x0", "y", "x0^-1", "(x0)", ""}) {
    EXPECT_THROW(P(R, bad), ParseError) << bad;
  }
}

TEST(Polynomial, EvaluateAndHomogeneity) {
  const RingSpec R = ring3();
  const Polynomial f = P(R, "x0^2+2*x1*x2");
  const std::vector<Scalar> pt{Scalar(R.field, 1), Scalar(R.field, 2), Scalar(R.field, 3)};
  EXPECT_EQ(f.evaluate(pt), Scalar(R.field, 13));
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE(P(R, "x0^2+x1").is_homogeneous());
  EXPECT_EQ(P(R, "2*x0+4*x1").monic(), P(R, "x0+2*x1"));
}

TEST(PolynomialProperties, RingAxiomsAndOrders) {
  for (FieldSpec field : {FieldSpec::default_field(), FieldSpec::rationals()}) {
    const RingSpec R = ring3(field);
    Rng rng(99);
    for (int k = 0; k < 200; ++k) {
      const Polynomial f = testing::random_polynomial(R, 3, 4, rng);
      const Polynomial g = testing::random_polynomial(R, 3, 4, rng);
      const Polynomial h = testing::random_polynomial(R, 3, 4, rng);
      ASSERT_EQ((f + g) * h, f * h + g * h);
      ASSERT_EQ(f * g, g * f);
      ASSERT_EQ(Polynomial::parse(R, f.to_string()), f);
      if (!f.is_zero() && !g.is_zero()) {
        const auto [mf, cf] = leading_term(f);
        const auto [mg, cg] = leading_term(g);
        const auto [mfg, cfg] = leading_term(f * g);
        ASSERT_EQ(mfg, mf * mg);
        ASSERT_EQ(cfg, cf * cg);
      }
    }
  }
}

TEST(PolynomialProperties, OrderAxioms) {
  Rng rng(5);
  for (TermOrder order : {TermOrder::grevlex(), TermOrder::lex(), TermOrder::elimination(1)}) {
    for (int k = 0; k < 500; ++k) {
      const Monomial a = testing::random_monomial(4, 3, rng);
      const Monomial b = testing::random_monomial(4, 3, rng);
      const Monomial c = testing::random_monomial(4, 3, rng);
      const auto ab = order.compare(a, b);
      ASSERT_EQ(ab == std::strong_ordering::equal, a == b);
      ASSERT_EQ(order.compare(b, a), 0 <=> ab);
      if (ab < 0 && order.compare(b, c) < 0) {
        ASSERT_TRUE(order.compare(a, c) < 0);
      }
      if (ab != 0) {
        ASSERT_EQ(order.compare(a * c, b * c), ab);
      }
    }
  }
}

}  // namespace
}  // namespace gradus
