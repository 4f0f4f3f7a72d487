// Copyright 2026 The fuzzbound Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fuzzbound;
using fixtures::two_state_a;
using fixtures::two_state_ap;

namespace {

TEST(Generator, DeterministicPerSeed) {
  const auto a = oracle::generate_automaton(fixtures::spec(5, 2, 42));
  const auto b = oracle::generate_automaton(fixtures::spec(5, 2, 42));
  EXPECT_EQ(a.transitions().size(), b.transitions().size());
  EXPECT_EQ(a.initial(), b.initial());
  EXPECT_EQ(a.terminal(), b.terminal());
  for (SymbolId s = 0; s < 2; ++s) EXPECT_EQ(a.transition_relation(s), b.transition_relation(s));
  EXPECT_EQ(a.alphabet(), (std::vector<std::string>{"s0", "s1"}));
}

TEST(Generator, DensityControlsTransitionCount) {
  auto sparse = fixtures::spec(20, 1, 1);
  sparse.transition_density = 0.05;
  auto dense = sparse;
  dense.transition_density = 0.9;
  EXPECT_LT(oracle::generate_automaton(sparse).num_transitions(), oracle::generate_automaton(dense).num_transitions());
  auto bad = sparse;
  bad.num_states = 0;
  EXPECT_THROW(oracle::generate_automaton(bad), InvalidAutomaton);
}

template <class L>
void naive_agrees(const L& l) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = oracle::generate_automaton(fixtures::spec(1 + seed % 5, 1 + seed % 2, 10 + seed));
    const auto ap = oracle::generate_automaton(fixtures::spec(1 + (seed / 2) % 5, 1 + seed % 2, 90 + seed));
    for (Mode m : {Mode::simulation, Mode::bisimulation}) {
      const auto naive = oracle::naive_dbsim(l, a, ap, 6, m);
      ASSERT_EQ(naive.size(), 7u);
      const auto res = detail::run(l, m, a, ap, 6, true);
      for (std::size_t n = 0; n <= 6; ++n) EXPECT_LE(max_abs_diff(naive[n], res.component(n)), 1e-12);
    }
  }
}

TEST(NaiveOracle, AgreesWithSparseAlgorithm) {
  naive_agrees(Godel{});
  naive_agrees(Lukasiewicz{});
  naive_agrees(Product{});
}

TEST(NaiveOracle, ExampleTable) {
  const auto naive = oracle::naive_dbsim(Lukasiewicz{}, two_state_a(), two_state_ap(), 3, Mode::simulation);
  EXPECT_NEAR(naive[3](0, 0).value(), 0.7, 1e-12);
  EXPECT_NEAR(naive[3](1, 1).value(), 0.5, 1e-12);
}

TEST(LanguageVerifier, AcceptsAlgorithmOutputs) {
  const auto a = two_state_a();
  const auto ap = two_state_ap();
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto sim = compute_dbsim(Product{}, a, ap, n).phi();
    EXPECT_TRUE(oracle::verify_language_preservation(Product{}, a, ap, sim, n).ok);
    const auto bis = compute_dbbisim(Product{}, a, ap, n).phi();
    EXPECT_TRUE(oracle::verify_language_invariance(Product{}, a, ap, bis, n).ok);
  }
}

TEST(LanguageVerifier, ReportsWitnesses) {
  const auto a = two_state_a();
  const auto ap = two_state_ap();
  FuzzyRelation full(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) full(i, j) = Degree::one();
  const auto report = oracle::verify_language_preservation(Godel{}, a, ap, full, 2);
  EXPECT_FALSE(report.ok);
  ASSERT_FALSE(report.violations.empty());
  bool saw_pair = false, saw_norm = false;
  for (const auto& v : report.violations) {
    EXPECT_GT(v.lhs, v.rhs);
    if (v.x) {
      saw_pair = true;
      // The witness word must actually separate the two states.
      const Degree lx = language_eval(Godel{}, pin_initial(a, *v.x), v.word);
      const Degree lxp = language_eval(Godel{}, pin_initial(ap, *v.xp), v.word);
      EXPECT_EQ(Godel{}.residuum(lx, lxp), v.rhs);
    } else {
      saw_norm = true;
    }
  }
  EXPECT_TRUE(saw_pair);
  EXPECT_FALSE(saw_norm);  // the norm of the full relation is still bounded here
}

TEST(LanguageVerifier, ShapeAndCapErrors) {
  const auto a = oracle::generate_automaton(fixtures::spec(2, 2, 3));
  EXPECT_THROW(oracle::verify_language_preservation(Godel{}, a, a, FuzzyRelation(3, 2), 1), DimensionMismatch);
  EXPECT_THROW(oracle::verify_language_preservation(Godel{}, a, a, FuzzyRelation::identity(2), 30, 1000),
               ResourceCapExceeded);
}

template <class L>
void language_properties(const L& l) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto a = oracle::generate_automaton(fixtures::spec(3, 2, 5000 + seed));
    const auto ap = oracle::generate_automaton(fixtures::spec(3, 2, 6000 + seed));
    for (std::size_t n = 0; n <= 3; ++n) {
      EXPECT_TRUE(oracle::verify_language_preservation(l, a, ap, compute_dbsim(l, a, ap, n).phi(), n).ok);
      EXPECT_TRUE(oracle::verify_language_invariance(l, a, ap, compute_dbbisim(l, a, ap, n).phi(), n).ok);
    }
  }
}

TEST(LanguageVerifier, RandomPairs) {
  language_properties(Godel{});
  language_properties(Lukasiewicz{});
  language_properties(Product{});
}

}  // namespace
