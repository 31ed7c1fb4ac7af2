#include <gtest/gtest.h>

#include "gradus/error.hpp"
#include "gradus/experiments.hpp"
#include "gradus/hilbert.hpp"
#include "oracles.hpp"

namespace gradus {
namespace {

using testing::P;
using testing::ring3;

const FieldSpec F = FieldSpec::default_field();

Ideal I(const RingSpec& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(P(R, g));
  return Ideal(R, std::move(ps));
}

TEST(HilbertFunction, StandardMonomialsMatchRankOracle) {
  Rng rng(3);
  const RingSpec R = ring3();
  for (int k = 0; k < 20; ++k) {
    const Ideal a = testing::random_ideal(R, 1 + rng.below(4), 3, rng);
    for (unsigned d = 0; d <= 10; ++d) {
      ASSERT_EQ(hilbert_function(a, d), binomial(d + 2, 2) - testing::ideal_dimension_by_rank(a, d));
      ASSERT_EQ(hilbert_function_by_rank(a, d), hilbert_function(a, d));
    }
  }
}

TEST(HilbertPolynomial, Points) {
  for (std::size_t s : {1u, 2u, 5u, 9u}) {
    const PointSet X = random_general_points(s, 2, 4, F);
    const auto hp = hilbert_polynomial(vanishing_ideal(X));
    EXPECT_EQ(hp.polynomial, HilbertPolynomial({mpq_class(static_cast<long>(s))}));
    EXPECT_EQ(hp.stable_from, delta_X(X));
  }
}

TEST(HilbertPolynomial, ZeroIdeal) {
  const auto hp = hilbert_polynomial(Ideal(ring3()));
  EXPECT_EQ(hp.polynomial.to_string(), "1/2*d^2+3/2*d+1");
  EXPECT_EQ(hp.stable_from, 0u);
  for (long d = 0; d < 20; ++d) EXPECT_EQ(hp.polynomial(d), mpq_class(static_cast<long>(binomial(d + 2, 2))));
}

TEST(HilbertPolynomial, ArtinianIsZero) {
  const auto hp = hilbert_polynomial(I(ring3(), {"x0^2", "x1^2", "x2^2"}));
  EXPECT_TRUE(hp.polynomial.is_zero());
  EXPECT_EQ(hp.polynomial.to_string(), "0");
  EXPECT_EQ(hp.stable_from, 4u);
}

TEST(HilbertPolynomial, CurveHasDegreeOne) {
  // plane cubic: HF = 3d for d >= 1
  const auto hp = hilbert_polynomial(I(ring3(), {"x0^3+x1^3+x2^3"}));
  EXPECT_EQ(hp.polynomial.to_string(), "3*d");
  EXPECT_EQ(hp.stable_from, 1u);
}

TEST(HilbertPolynomial, ProbeLimitReportsPartialValues) {
  try {
    // HF 1,3,6,7,6,3,1: no quadratic fits the first seven values
    hilbert_polynomial(I(ring3(), {"x0^3", "x1^3", "x2^3"}), 6);
    FAIL() << "expected StabilizationError";
  } catch (const StabilizationError& e) {
    EXPECT_FALSE(e.partial_values().empty());
    EXPECT_EQ(e.partial_values()[1], 3u);
  }
}

TEST(HilbertPolynomial, DegreeBoundedByDimension) {
  Rng rng(12);
  const RingSpec R = ring3();
  for (int k = 0; k < 20; ++k) {
    const Ideal a = testing::random_ideal(R, 1 + rng.below(3), 3, rng);
    const auto hp = hilbert_polynomial(a);
    ASSERT_LE(hp.polynomial.degree(), 2);
    for (unsigned d = hp.stable_from; d < hp.stable_from + 8; ++d) {
      ASSERT_EQ(hp.polynomial(d), mpq_class(static_cast<unsigned long>(hilbert_function(a, d))));
    }
  }
}

TEST(Artinian, Examples) {
  const RingSpec R = ring3();
  EXPECT_TRUE(is_artinian(I(R, {"x0", "x1", "x2"})));
  EXPECT_EQ(hilbert_values(I(R, {"x0", "x1", "x2"}), 3), (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_FALSE(is_artinian(vanishing_ideal(random_general_points(1, 2, 1, F))));
  EXPECT_FALSE(is_artinian(vanishing_ideal(random_general_points(6, 2, 1, F))));
  const PointSet X1 = random_general_points(2, 2, 1, F);
  EXPECT_TRUE(is_artinian(ideal_sum(vanishing_ideal(X1), example_J(X1.ring(), ExampleJ::kJX1))));
  EXPECT_FALSE(is_artinian(I(R, {"x0*x1", "x2^2"})));
}

TEST(Artinian, DoubleCriterionAgreement) {
  Rng rng(2718);
  const RingSpec R = ring3();
  int artinian = 0;
  for (int k = 0; k < 50; ++k) {
    const Ideal a = testing::random_artinian_candidate(R, rng);
    if (a.is_zero() || a.is_unit()) continue;
    const ArtinianCertificate cert = artinian_certificate(a);  // throws on disagreement
    ASSERT_EQ(cert.pure_powers, cert.eventual_zero);
    ASSERT_EQ(cert.eventual_zero, hilbert_function(a, cert.probe_degree) == 0);
    artinian += cert.pure_powers ? 1 : 0;
  }
  // the generator must exercise both outcomes
  EXPECT_GT(artinian, 5);
  EXPECT_LT(artinian, 45);
}

TEST(Socle, Examples) {
  const RingSpec R = ring3();
  const SocleReport m2 = socle_degree(I(R, {"x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"}));
  EXPECT_TRUE(m2.artinian);
  EXPECT_EQ(m2.socle_degree, std::optional<unsigned>(1));
  EXPECT_EQ(m2.initial_degree, 2);

  const PointSet X1 = random_general_points(2, 2, 1, F);
  const Ideal J1 = example_J(X1.ring(), ExampleJ::kJX1);
  const SocleReport r1 = socle_degree(ideal_sum(vanishing_ideal(X1), J1), J1);
  EXPECT_EQ(r1.socle_degree, std::optional<unsigned>(1));
  EXPECT_EQ(r1.initial_degree, 1);

  const PointSet X6 = random_general_points(7, 2, 1, F);
  const Ideal J6 = example_J(X6.ring(), ExampleJ::kJX6);
  const SocleReport r6 = socle_degree(ideal_sum(vanishing_ideal(X6), J6), J6);
  EXPECT_EQ(r6.socle_degree, std::optional<unsigned>(3));
  EXPECT_EQ(r6.initial_degree, 2);

  const SocleReport none = socle_degree(vanishing_ideal(X6));
  EXPECT_FALSE(none.artinian);
  EXPECT_FALSE(none.socle_degree.has_value());
  EXPECT_THROW(socle_degree(Ideal(R, {Polynomial::constant(R, Scalar::one(F))})), PreconditionError);
}

TEST(Socle, TopNonzeroDegree) {
  Rng rng(8);
  const RingSpec R = ring3();
  for (int k = 0; k < 30; ++k) {
    const Ideal a = testing::random_artinian_candidate(R, rng);
    if (a.is_zero() || a.is_unit()) continue;
    const SocleReport rep = socle_degree(a);
    if (!rep.artinian) continue;
    const unsigned omega = *rep.socle_degree;
    ASSERT_NE(hilbert_function(a, omega), 0u);
    for (unsigned d = omega + 1; d <= omega + 4; ++d) ASSERT_EQ(hilbert_function(a, d), 0u);
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta_X(random_general_points(1, 2, 1, F)), 0u);
  EXPECT_EQ(delta_X(random_general_points(4, 2, 1, F)), 2u);
  EXPECT_EQ(delta_X(random_general_points(7, 2, 1, F)), 3u);
  for (std::size_t s = 1; s <= 12; ++s) {
    const PointSet X = random_general_points(s, 2, 5, F);
    const unsigned delta = delta_X(X);
    EXPECT_EQ(delta, interpolation_degree(X));
    // oracle: least d with binom(d+2,2) >= s
    unsigned expected = 0;
    while (binomial(expected + 2, 2) < s) ++expected;
    EXPECT_EQ(delta, expected);
  }
}

TEST(HilbertData, ValuesAndPolynomial) {
  const PointSet X = random_general_points(4, 2, 1, F);
  const HilbertFunction hf = hilbert_data(vanishing_ideal(X), 5);
  EXPECT_EQ(hf.values, (std::vector<std::size_t>{1, 3, 4, 4, 4, 4}));
  ASSERT_TRUE(hf.polynomial.has_value());
  EXPECT_EQ(hf.polynomial->to_string(), "4");
  EXPECT_EQ(hf.stable_from, std::optional<unsigned>(2));
}

}  // namespace
}  // namespace gradus
