// Copyright 2026 The fuzzbound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fuzzbound/fuzzbound.hpp"

namespace fixtures {

using namespace fuzzbound;

inline FuzzyAutomaton two_state_a() {
  return FuzzyAutomaton({"s"}, 2, FuzzySet::from_values({1.0, 0.0}), FuzzySet::from_values({0.0, 1.0}),
                        {{0, 0, 1, Degree(0.4)}, {1, 0, 1, Degree(0.5)}}, {"u", "v"});
}

inline FuzzyAutomaton two_state_ap() {
  return FuzzyAutomaton({"s"}, 2, FuzzySet::from_values({1.0, 0.0}), FuzzySet::from_values({0.0, 0.8}),
                        {{0, 0, 1, Degree(0.5)}, {1, 0, 1, Degree(0.4)}}, {"u'", "v'"});
}

// Single state with a self-loop of the given degree; initial = terminal = 1.
inline FuzzyAutomaton loop(double degree, std::string name = "u") {
  return FuzzyAutomaton({"s"}, 1, FuzzySet::from_values({1.0}), FuzzySet::from_values({1.0}),
                        {{0, 0, 0, Degree(degree)}}, {std::move(name)});
}

inline oracle::RandomAutomatonSpec spec(std::size_t n, std::size_t symbols, std::uint64_t seed) {
  oracle::RandomAutomatonSpec s;
  s.num_states = n;
  s.num_symbols = symbols;
  s.seed = seed;
  return s;
}

// Sup over all state paths of sigma(x0) * delta(x0,x1) * ... * tau(xn).
template <class L>
Degree path_language(const L& l, const FuzzyAutomaton& a, const Word& w) {
  Degree best = Degree::zero();
  std::vector<StateId> path(w.size() + 1, 0);
  const std::size_t n = a.num_states();
  std::vector<FuzzyRelation> delta;
  for (SymbolId s = 0; s < a.num_symbols(); ++s) delta.push_back(a.transition_relation(s));
  while (true) {
    Degree d = a.initial()[path[0]];
    for (std::size_t i = 0; i < w.size(); ++i) d = l.tnorm(d, delta[w[i]](path[i], path[i + 1]));
    d = l.tnorm(d, a.terminal()[path.back()]);
    best = join(best, d);
    std::size_t i = 0;
    while (i < path.size() && ++path[i] == n) path[i++] = 0;
    if (i == path.size()) break;
  }
  return best;
}

inline double pw(double b, int e) { return std::pow(b, e); }

}  // namespace fixtures
