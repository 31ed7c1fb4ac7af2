#include <gtest/gtest.h>

#include "gradus/betti.hpp"
#include "gradus/error.hpp"
#include "gradus/experiments.hpp"
#include "oracles.hpp"

namespace gradus {
namespace {

using testing::P;
using testing::ring3;

const FieldSpec F = FieldSpec::default_field();

using Entries = std::map<std::pair<int, int>, std::size_t>;

BettiTable make_table(std::size_t nvars, const Entries& entries) {
  BettiTable t(nvars);
  for (const auto& [ij, v] : entries) t.set(ij.first, ij.second, v);
  return t;
}

TEST(GradedBetti, LinearForm) {
  const RingSpec R = ring3();
  const BettiTable t = graded_betti(Ideal(R, {P(R, "x0")}));
  EXPECT_EQ(t.entries(), (Entries{{{0, 0}, 1}, {{1, 1}, 1}}));
  EXPECT_FALSE(t.truncated);
}

TEST(GradedBetti, ZeroIdeal) {
  const BettiTable t = graded_betti(Ideal(ring3()));
  EXPECT_EQ(t.entries(), (Entries{{{0, 0}, 1}}));
  EXPECT_TRUE(betti_consistency_check(t, hilbert_data(Ideal(ring3()), 8)));
}

TEST(GradedBetti, UnitIdealRejected) {
  const RingSpec R = ring3();
  EXPECT_THROW(graded_betti(Ideal(R, {Polynomial::constant(R, Scalar::one(F))})), PreconditionError);
}

TEST(GradedBetti, GeneralPointTables) {
  const Ideal two = vanishing_ideal(random_general_points(2, 2, 1, F));
  EXPECT_EQ(graded_betti(two).entries(), (Entries{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}}));
  const Ideal three = vanishing_ideal(random_general_points(3, 2, 1, F));
  EXPECT_EQ(graded_betti(three).entries(), (Entries{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  const Ideal four = vanishing_ideal(random_general_points(4, 2, 1, F));
  EXPECT_EQ(graded_betti(four).entries(), (Entries{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}}));
  const Ideal seven = vanishing_ideal(random_general_points(7, 2, 1, F));
  const BettiTable t7 = graded_betti(seven);
  EXPECT_EQ(t7.entries(), (Entries{{{0, 0}, 1}, {{1, 3}, 3}, {{2, 4}, 1}, {{2, 5}, 1}}));
  EXPECT_EQ(t7.totals(), (std::vector<std::size_t>{1, 3, 2}));
}

TEST(GradedBetti, TruncationIsFlagged) {
  const Ideal seven = vanishing_ideal(random_general_points(7, 2, 1, F));
  const BettiTable t = graded_betti(seven, 4);
  EXPECT_TRUE(t.truncated);
  EXPECT_EQ(t.max_degree, 4u);
  EXPECT_EQ(t.at(2, 5), 0u);
  EXPECT_EQ(t.at(2, 4), 1u);
}

// beta_{1,j} = dim I_j - dim (R_1 I_{j-1}), both by rank.
std::size_t minimal_generator_count(const Ideal& ideal, unsigned j) {
  const RingSpec& R = ideal.ring();
  const auto basis = monomials_of_degree(R, j);
  const std::size_t full = testing::ideal_dimension_by_rank(ideal, j);
  if (j == 0) return full;
  std::vector<Polynomial> products;
  for (const auto& g : ideal.generators()) {
    if (g.degree() >= static_cast<int>(j)) continue;
    for (const auto& m : monomials_of_degree(R, j - static_cast<unsigned>(g.degree()))) {
      products.push_back(g.times_term(m, Scalar::one(R.field)));
    }
  }
  return full - rank(coefficient_matrix(products, basis, R.field));
}

TEST(GradedBettiProperties, RandomIdeals) {
  Rng rng(606);
  const RingSpec R = ring3();
  for (int k = 0; k < 25; ++k) {
    const Ideal a = (k % 2 == 0) ? testing::random_ideal(R, 1 + rng.below(4), 3, rng)
                                 : testing::random_artinian_candidate(R, rng);
    if (a.is_unit()) continue;
    const BettiTable t = graded_betti(a);
    ASSERT_FALSE(t.truncated);
    ASSERT_EQ(t.at(0, 0), 1u);
    for (const auto& [ij, v] : t.entries()) {
      ASSERT_LE(ij.first, 3);
      ASSERT_GT(v, 0u);
    }
    for (unsigned j = 1; j <= t.max_degree; ++j) ASSERT_EQ(t.at(1, j), minimal_generator_count(a, j)) << j;
    ASSERT_TRUE(betti_consistency_check(t, hilbert_data(a, t.max_degree + 4)));
    if (is_artinian(a)) {
      std::size_t top = 0;
      for (const auto& [ij, v] : t.entries()) top += ij.first == 3 ? v : 0;
      ASSERT_GT(top, 0u);  // depth zero
    }
  }
}

TEST(GradedBetti, ArtinianQuotientHasThirdColumn) {
  const PointSet X = random_general_points(7, 2, 1, F);
  const Ideal q = ideal_sum(vanishing_ideal(X), example_J(X.ring(), ExampleJ::kJX6));
  const BettiTable t = graded_betti(q);
  ASSERT_EQ(t.totals().size(), 4u);
  EXPECT_GT(t.totals()[3], 0u);
  EXPECT_TRUE(betti_consistency_check(t, hilbert_data(q, 10)));
}

TEST(BettiConsistency, FourPoints) {
  BettiTable t = make_table(3, {{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
  t.max_degree = 5;
  t.degree_bound = 4;
  HilbertFunction hf;
  hf.values = {1, 3, 4, 4, 4, 4};
  EXPECT_TRUE(betti_consistency_check(t, hf));
  hf.values = {1, 3, 4, 5, 4, 4};
  EXPECT_FALSE(betti_consistency_check(t, hf));
}

TEST(RenderBetti, Examples) {
  EXPECT_EQ(render_betti(make_table(3, {{{0, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}})),
            "   1 2 1\n0: 1 1 -\n1: - 1 1\n");
  EXPECT_EQ(render_betti(make_table(3, {{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}})),
            "   1 3 2\n0: 1 - -\n1: - 3 2\n");
  EXPECT_EQ(render_betti(make_table(3, {{{0, 0}, 1}})), "   1\n0: 1\n");
}

TEST(RenderBetti, WideColumnsRightAligned) {
  const std::string text = render_betti(make_table(3, {{{0, 0}, 1}, {{1, 5}, 12}, {{2, 6}, 11}}));
  EXPECT_EQ(text, "   1 12 11\n0: 1  -  -\n1: -  -  -\n2: -  -  -\n3: -  -  -\n4: - 12 11\n");
}

}  // namespace
}  // namespace gradus
