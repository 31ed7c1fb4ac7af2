#include <gtest/gtest.h>

#include "gradus/betti.hpp"
#include "gradus/error.hpp"
#include "gradus/hilbert.hpp"
#include "gradus/points.hpp"
#include "oracles.hpp"

namespace gradus {
namespace {

using testing::P;
using testing::ring3;

const FieldSpec F = FieldSpec::default_field();

ProjectivePoint pt(std::initializer_list<std::int64_t> c, FieldSpec field = F) {
  std::vector<Scalar> coords;
  for (auto v : c) coords.emplace_back(field, v);
  return ProjectivePoint(std::move(coords));
}

std::map<unsigned, std::size_t> generator_degrees(const Ideal& ideal) {
  std::map<unsigned, std::size_t> out;
  for (const auto& g : ideal.minimal_generators()) ++out[static_cast<unsigned>(g.degree())];
  return out;
}

TEST(ProjectivePoint, Normalization) {
  EXPECT_EQ(pt({0, 2, 4}), pt({0, 1, 2}));
  EXPECT_EQ(pt({0, 2, 4}).pivot(), 1u);
  EXPECT_THROW(pt({0, 0, 0}), PreconditionError);
}

TEST(PointSet, RejectsDuplicates) {
  EXPECT_THROW(PointSet(2, F, {pt({1, 2, 3}), pt({2, 4, 6})}), PreconditionError);
  EXPECT_THROW(PointSet(2, F, {}), PreconditionError);
  EXPECT_THROW(PointSet(2, F, {pt({1, 2})}), PreconditionError);
}

TEST(RandomGeneralPoints, SinglePoint) {
  const PointSet X = random_general_points(1, 2, 9, F);
  EXPECT_EQ(X.size(), 1u);
  EXPECT_TRUE(is_general_position(X));
}

TEST(RandomGeneralPoints, NoThreeCollinear) {
  for (std::size_t s = 4; s <= 8; ++s) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const PointSet X = random_general_points(s, 2, seed, F);
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b)
          for (std::size_t c = b + 1; c < s; ++c) ASSERT_FALSE(testing::collinear(X[a], X[b], X[c]));
    }
  }
}

TEST(RandomGeneralPoints, Deterministic) {
  EXPECT_EQ(random_general_points(7, 2, 42, F), random_general_points(7, 2, 42, F));
  EXPECT_NE(random_general_points(7, 2, 42, F), random_general_points(7, 2, 43, F));
  EXPECT_EQ(random_general_points(7, 2, 42, F).seed(), std::optional<std::uint64_t>(42));
}

TEST(RandomGeneralPoints, RationalField) {
  const PointSet X = random_general_points(5, 2, 1, FieldSpec::rationals());
  EXPECT_TRUE(is_general_position(X));
  EXPECT_EQ(hilbert_values(vanishing_ideal(X), 3), (std::vector<std::size_t>{1, 3, 5, 5}));
}

TEST(GeneralPosition, DetectsCollinearTriples) {
  const PointSet X(2, F, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0})});
  EXPECT_FALSE(is_general_position(X));
  EXPECT_THROW(random_general_points(10, 2, 1, FieldSpec::prime(3)), ComputationError);
}

TEST(EvaluationMatrix, Examples) {
  const PointSet X = random_general_points(3, 2, 1, F);
  const Matrix e0 = evaluation_matrix(X, 0);
  ASSERT_EQ(e0.rows(), 3u);
  ASSERT_EQ(e0.cols(), 1u);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_TRUE(e0(r, 0).is_one());

  const PointSet single(2, F, {pt({1, 0, 0})});
  const Matrix e1 = evaluation_matrix(single, 1);
  EXPECT_EQ(e1, Matrix::from_rows(F, {{Scalar(F, 1), Scalar(F, 0), Scalar(F, 0)}}, 3));
}

TEST(VanishingIdeal, Examples) {
  const RingSpec R = ring3();
  const PointSet single(2, F, {pt({1, 0, 0})});
  EXPECT_EQ(vanishing_ideal(single), Ideal(R, {P(R, "x1"), P(R, "x2")}));
  EXPECT_EQ(vanishing_ideal_oracle(single), vanishing_ideal(single));
  EXPECT_EQ(generator_degrees(vanishing_ideal(random_general_points(2, 2, 1, F))),
            (std::map<unsigned, std::size_t>{{1, 1}, {2, 1}}));
  EXPECT_EQ(generator_degrees(vanishing_ideal(random_general_points(3, 2, 1, F))),
            (std::map<unsigned, std::size_t>{{2, 3}}));
}

TEST(VanishingIdeal, SpecialPositionStillCorrect) {
  // Four points on a line plus one off it: not general, but I_X must still be right.
  const PointSet X(2, F, {pt({1, 0, 0}), pt({0, 1, 0}), pt({1, 1, 0}), pt({1, 2, 0}), pt({0, 0, 1})});
  EXPECT_EQ(vanishing_ideal(X), vanishing_ideal_oracle(X));
  EXPECT_EQ(hilbert_values(vanishing_ideal(X), 5), (std::vector<std::size_t>{1, 3, 4, 5, 5, 5}));
}

TEST(VanishingIdeal, OracleEquivalence) {
  for (std::size_t s = 1; s <= 10; ++s) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const PointSet X = random_general_points(s, 2, seed, F);
      const Ideal a = vanishing_ideal(X);
      ASSERT_EQ(a.groebner_basis(), vanishing_ideal_oracle(X).groebner_basis()) << "s=" << s;
      for (const auto& g : a.generators()) {
        for (const auto& p : X.points()) ASSERT_TRUE(g.evaluate(p.coords()).is_zero());
      }
    }
  }
}

TEST(VanishingIdeal, HigherDimension) {
  const PointSet X = random_general_points(6, 3, 2, F);
  const Ideal a = vanishing_ideal(X);
  EXPECT_EQ(a.groebner_basis(), vanishing_ideal_oracle(X).groebner_basis());
  EXPECT_EQ(hilbert_values(a, 3), (std::vector<std::size_t>{1, 4, 6, 6}));
}

TEST(VanishingIdeal, GeneralPositionHilbertLaw) {
  for (std::size_t s = 1; s <= 16; ++s) {
    const PointSet X = random_general_points(s, 2, s, F);
    const Ideal a = vanishing_ideal(X);
    for (unsigned d = 0; d <= s + 2; ++d) {
      ASSERT_EQ(hilbert_function(a, d), std::min<std::size_t>(binomial(d + 2, 2), s)) << s << " " << d;
    }
  }
}

TEST(InterpolationDegree, MatchesDelta) {
  EXPECT_EQ(interpolation_degree(random_general_points(1, 2, 1, F)), 0u);
  EXPECT_EQ(interpolation_degree(random_general_points(4, 2, 1, F)), 2u);
  EXPECT_EQ(interpolation_degree(random_general_points(7, 2, 1, F)), 3u);
}

TEST(NonZeroDivisor, Examples) {
  const RingSpec R = ring3();
  const PointSet X(2, F, {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
  EXPECT_TRUE(is_nonzerodivisor(P(R, "x0+x1+x2"), X));
  EXPECT_FALSE(is_nonzerodivisor(P(R, "x1+x2"), X));  // vanishes at [1:0:0] only
  EXPECT_FALSE(is_nonzerodivisor(Polynomial(R), X));
}

TEST(NonZeroDivisor, AgreesWithMultiplicationRank) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t s = 2 + rng.below(8);
    const PointSet X = random_general_points(s, 2, 100 + trial, F);
    const RingSpec R = X.ring();
    const Ideal a = vanishing_ideal(X);
    // Half the trials force g through the first point.
    Polynomial g = random_form(R, 1 + rng.below(2), rng);
    if (trial % 2 == 0) {
      // x_k is 1 at the first point, so subtracting g(P_1) x_k^e kills g there.
      const std::size_t k = X[0].pivot();
      Monomial xk(3);
      xk.set(k, static_cast<unsigned>(g.degree()));
      g = g - Polynomial::term(R, xk, g.evaluate(X[0].coords()));
    }
    const unsigned delta = delta_X(a, s);
    bool injective = true;
    for (unsigned d = 0; d <= delta + 2; ++d) injective = injective && testing::multiplication_injective(g, a, d);
    ASSERT_EQ(is_nonzerodivisor(g, X), injective) << "trial " << trial;
  }
}

}  // namespace
}  // namespace gradus
