// Copyright 2026 The fuzzbound Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fuzzbound;
using fixtures::two_state_a;
using fixtures::two_state_ap;

namespace {

const char* const kAlpha = "(s . (s . (0.9 -> T)))";

TEST(Formula, ParseAndPrint) {
  const Formula f = parse_formula(kAlpha);
  EXPECT_EQ(f.kind(), Formula::Kind::diamond);
  EXPECT_EQ(f.symbol(), "s");
  EXPECT_EQ(formula_depth(f), 2u);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(to_string(f), kAlpha);
  EXPECT_EQ(f, Formula::diamond("s", Formula::diamond("s", Formula::implies(Degree(0.9), Formula::tau()))));
  EXPECT_TRUE(in_dialect(f, Dialect::implication));
  EXPECT_FALSE(in_dialect(f, Dialect::equivalence));

  const Formula g = parse_formula("  ( (a . T) & (0.25 <-> (b' . T)) )");
  EXPECT_EQ(g.kind(), Formula::Kind::conj);
  EXPECT_EQ(to_string(g), "((a . T) & (0.25 <-> (b' . T)))");
  EXPECT_FALSE(in_dialect(g, Dialect::implication));
  EXPECT_TRUE(in_dialect(g, Dialect::equivalence));
  EXPECT_TRUE(in_dialect(parse_formula("T"), Dialect::equivalence));
}

TEST(Formula, ParseErrorsCarryPositions) {
  struct Case {
    const char* text;
    std::size_t pos;
  };
  for (const Case& c : {Case{"", 0}, Case{"(s . T", 6}, Case{"(1.5 -> T)", 1}, Case{"(0.5 => T)", 5},
                        Case{"T T", 2}, Case{"(T & )", 5}, Case{"(. T)", 1}, Case{"x", 0}}) {
    try {
      parse_formula(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), c.pos) << c.text << ": " << e.what();
    }
  }
}

template <class L>
std::pair<double, double> alpha_values(const L& l) {
  const Formula f = parse_formula(kAlpha);
  return {eval_formula(l, two_state_a(), f)[0].value(), eval_formula(l, two_state_ap(), f)[0].value()};
}

TEST(Formula, GoldenValues) {
  auto [g, gp] = alpha_values(Godel{});
  EXPECT_NEAR(g, 0.4, 1e-12);
  EXPECT_NEAR(gp, 0.4, 1e-12);
  auto [l, lp] = alpha_values(Lukasiewicz{});
  EXPECT_NEAR(l, 0.0, 1e-12);
  EXPECT_NEAR(lp, 0.0, 1e-12);
  auto [p, pp] = alpha_values(Product{});
  EXPECT_NEAR(p, 0.2, 1e-12);
  EXPECT_NEAR(pp, 8.0 / 45.0, 1e-12);
}

TEST(Formula, EvaluationBasics) {
  Godel g;
  const auto a = two_state_a();
  EXPECT_EQ(eval_formula(g, a, Formula::tau()), a.terminal());
  EXPECT_EQ(eval_formula(g, a, parse_formula("(s . T)")), FuzzySet::from_values({0.4, 0.5}));
  EXPECT_EQ(eval_formula(g, a, parse_formula("((s . T) & (0.45 -> (s . T)))")), FuzzySet::from_values({0.4, 0.5}));
  EXPECT_EQ(eval_formula(g, a, parse_formula("(0.45 <-> (s . T))")), FuzzySet::from_values({0.4, 0.45}));
  EXPECT_THROW(eval_formula(g, a, parse_formula("(t . T)")), UnknownSymbol);
}

TEST(RandomFormula, DeterministicAndBounded) {
  const std::vector<std::string> alphabet{"a", "b"};
  const std::vector<Degree> pool{Degree(0.0), Degree(0.4), Degree(1.0)};
  for (Dialect d : {Dialect::implication, Dialect::equivalence}) {
    std::size_t max_depth_seen = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const Formula f = random_formula(d, 3, alphabet, pool, seed);
      EXPECT_EQ(f, random_formula(d, 3, alphabet, pool, seed));
      EXPECT_LE(formula_depth(f), 3u);
      EXPECT_LE(f.size(), kMaxRandomFormulaSize);
      EXPECT_TRUE(in_dialect(f, d));
      EXPECT_EQ(parse_formula(to_string(f)), f);
      max_depth_seen = std::max(max_depth_seen, formula_depth(f));
    }
    EXPECT_EQ(max_depth_seen, 3u);
  }
  EXPECT_THROW(random_formula(Dialect::implication, 2, alphabet, {}, 0), DimensionMismatch);
}

TEST(ConstantPool, CollectsAutomatonDegrees) {
  const auto pool = automaton_constant_pool(two_state_a(), two_state_ap());
  std::vector<double> v;
  for (Degree d : pool) v.push_back(d.value());
  EXPECT_EQ(v, (std::vector<double>{0.0, 0.4, 0.5, 0.8, 1.0}));
}

TEST(HennessyMilner, DialectAndDepthAreEnforced) {
  Godel g;
  const auto phi = compute_dbsim(g, two_state_a(), two_state_ap(), 1).phi();
  EXPECT_THROW(hm_check_sim(g, two_state_a(), two_state_ap(), phi, 1, parse_formula(kAlpha)), DialectError);
  EXPECT_THROW(hm_check_sim(g, two_state_a(), two_state_ap(), phi, 1, parse_formula("(0.5 <-> T)")), DialectError);
  EXPECT_THROW(hm_check_bisim(g, two_state_a(), two_state_ap(), phi, 1, parse_formula("(0.5 -> T)")), DialectError);
  EXPECT_NO_THROW(hm_check_sim(g, two_state_a(), two_state_ap(), phi, 1, parse_formula("(s . T)")));
}

TEST(HennessyMilner, ExampleFormulaRespectsRelation) {
  const Formula f = parse_formula(kAlpha);
  const auto a = two_state_a();
  const auto ap = two_state_ap();
  const auto g = compute_dbsim(Godel{}, a, ap, 2).phi();
  EXPECT_TRUE(hm_check_sim(Godel{}, a, ap, g, 2, f));
  EXPECT_TRUE(hm_pointwise_bound(Godel{}, a, ap, g, f, Dialect::implication));
  // The full relation is not bounded by the formula.
  FuzzyRelation full(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) full(i, j) = Degree::one();
  EXPECT_FALSE(hm_pointwise_bound(Product{}, a, ap, full, f, Dialect::implication));
}

template <class L>
void hm_sampling(const L& l) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = oracle::generate_automaton(fixtures::spec(3, 2, 3000 + seed));
    const auto ap = oracle::generate_automaton(fixtures::spec(3, 2, 4000 + seed));
    const auto pool = automaton_constant_pool(a, ap);
    const std::size_t n = 3;
    const auto sim = compute_dbsim(l, a, ap, n).phi();
    const auto bis = compute_dbbisim(l, a, ap, n).phi();
    for (std::uint64_t k = 0; k < 40; ++k) {
      const Formula fi = random_formula(Dialect::implication, n, a.alphabet(), pool, seed * 100 + k);
      EXPECT_TRUE(hm_check_sim(l, a, ap, sim, n, fi)) << to_string(fi);
      EXPECT_TRUE(hm_pointwise_bound(l, a, ap, sim, fi, Dialect::implication)) << to_string(fi);
      const Formula fe = random_formula(Dialect::equivalence, n, a.alphabet(), pool, seed * 100 + k);
      EXPECT_TRUE(hm_check_bisim(l, a, ap, bis, n, fe)) << to_string(fe);
      EXPECT_TRUE(hm_pointwise_bound(l, a, ap, bis, fe, Dialect::equivalence)) << to_string(fe);
    }
  }
}

TEST(HennessyMilner, RandomFormulasRespectComputedRelations) {
  hm_sampling(Godel{});
  hm_sampling(Lukasiewicz{});
  hm_sampling(Product{});
}

}  // namespace
