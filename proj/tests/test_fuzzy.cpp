// Copyright 2026 The fuzzbound Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "fuzzbound/fuzzy.hpp"

using namespace fuzzbound;

namespace {

FuzzyRelation random_relation(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  FuzzyRelation out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out(i, j) = Degree(static_cast<double>(rng() % 11) / 10.0);
  return out;
}

TEST(FuzzyRelation, ConstructionAndAccess) {
  const auto r = FuzzyRelation::from_rows({{1.0, 0.5}, {0.0, 0.4}});
  EXPECT_EQ(r.rows(), 2u);
  EXPECT_EQ(r(0, 1).value(), 0.5);
  EXPECT_THROW(r.at(2, 0), IndexOutOfRange);
  EXPECT_THROW(FuzzyRelation::from_rows({{1.0}, {0.5, 0.5}}), DimensionMismatch);
  EXPECT_TRUE(FuzzyRelation::empty(3, 2).is_empty());
  EXPECT_FALSE(r.is_empty());
  EXPECT_EQ(FuzzyRelation::identity(2), FuzzyRelation::from_rows({{1, 0}, {0, 1}}));
}

TEST(FuzzySet, Access) {
  const auto f = FuzzySet::from_values({0.2, 0.9});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.at(1).value(), 0.9);
  EXPECT_THROW(f.at(2), IndexOutOfRange);
  EXPECT_THROW(FuzzySet::from_values({1.5}), InvalidDegree);
}

TEST(Compose, HandComputedGodel) {
  Godel g;
  const auto phi = FuzzyRelation::from_rows({{0.3, 0.9}, {1.0, 0.0}});
  const auto psi = FuzzyRelation::from_rows({{0.5, 0.2}, {0.7, 0.6}});
  const auto c = compose(g, phi, psi);
  EXPECT_EQ(c, FuzzyRelation::from_rows({{0.7, 0.6}, {0.5, 0.2}}));
  const auto f = FuzzySet::from_values({0.4, 1.0});
  EXPECT_EQ(compose(g, f, psi), FuzzySet::from_values({0.7, 0.6}));
  EXPECT_EQ(compose(g, phi, f), FuzzySet::from_values({0.9, 0.4}));
}

TEST(Compose, ShapeMismatchThrows) {
  Godel g;
  EXPECT_THROW(compose(g, FuzzyRelation(2, 3), FuzzyRelation(2, 3)), DimensionMismatch);
  EXPECT_THROW(compose(g, FuzzySet(3), FuzzyRelation(2, 2)), DimensionMismatch);
  EXPECT_THROW(compose(g, FuzzyRelation(2, 2), FuzzySet(3)), DimensionMismatch);
  EXPECT_THROW(subset_degree(g, FuzzySet(2), FuzzySet(3)), DimensionMismatch);
}

template <class L>
void check_algebra(const L& l) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const auto a = random_relation(rng, 3, 4);
    const auto b = random_relation(rng, 4, 2);
    const auto c = random_relation(rng, 2, 3);
    EXPECT_LE(max_abs_diff(compose(l, compose(l, a, b), c), compose(l, a, compose(l, b, c))), 1e-12);
    EXPECT_EQ(inverse(compose(l, a, b)), compose(l, inverse(b), inverse(a)));
    EXPECT_EQ(inverse(inverse(a)), a);
    // Monotone in each argument.
    const auto a2 = rel_meet(a, random_relation(rng, 3, 4));
    EXPECT_TRUE(rel_leq(l, compose(l, a2, b), compose(l, a, b)));
  }
}

TEST(Compose, AssociativeAndInverseLaw) {
  check_algebra(Godel{});
  check_algebra(Lukasiewicz{});
  check_algebra(Product{});
}

TEST(Degrees, SubsetAndEquality) {
  Lukasiewicz l;
  const auto g = FuzzySet::from_values({0.8, 0.3});
  const auto f = FuzzySet::from_values({0.5, 0.6});
  EXPECT_NEAR(subset_degree(l, g, f).value(), 0.7, 1e-12);
  EXPECT_NEAR(subset_degree(l, f, g).value(), 0.7, 1e-12);
  EXPECT_NEAR(equal_degree(l, g, f).value(), 0.7, 1e-12);
  EXPECT_EQ(subset_degree(l, g, g), Degree::one());
  EXPECT_EQ(subset_degree(l, FuzzySet(), FuzzySet()), Degree::one());
  EXPECT_TRUE(set_leq(l, FuzzySet::from_values({0.1, 0.2}), FuzzySet::from_values({0.1, 0.3})));
  EXPECT_FALSE(set_leq(l, g, f));
}

TEST(Relations, MeetJoinAndProperties) {
  Godel g;
  const auto a = FuzzyRelation::from_rows({{1.0, 0.4}, {0.4, 1.0}});
  const auto b = FuzzyRelation::from_rows({{0.5, 0.6}, {0.0, 1.0}});
  EXPECT_EQ(rel_meet(a, b), FuzzyRelation::from_rows({{0.5, 0.4}, {0.0, 1.0}}));
  EXPECT_EQ(rel_join(a, b), FuzzyRelation::from_rows({{1.0, 0.6}, {0.4, 1.0}}));
  EXPECT_NEAR(max_abs_diff(a, b), 0.5, 1e-12);
  EXPECT_TRUE(is_reflexive(g, a));
  EXPECT_TRUE(is_symmetric(g, a));
  EXPECT_TRUE(is_transitive(g, a));
  EXPECT_FALSE(is_reflexive(g, b));
  EXPECT_FALSE(is_symmetric(g, b));
  EXPECT_THROW(rel_meet(a, FuzzyRelation(2, 3)), DimensionMismatch);
  const auto c = FuzzyRelation::from_rows({{1.0, 0.9, 0.0}, {0.0, 1.0, 0.9}, {0.0, 0.0, 1.0}});
  EXPECT_FALSE(is_transitive(g, c));
}

}  // namespace
