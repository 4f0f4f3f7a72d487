/*
 * Copyright 2026 The fuzzbound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file oracle.hpp
 * @brief Brute-force reference computations for differential testing.
 *
 * Nothing here is meant to be fast. naive_dbsim restates the greatest
 * depth-bounded (bi)simulation as a dense recurrence obtained from the
 * adjunction, and the language verifiers enumerate every word up to a
 * length bound.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fuzzbound/automata.hpp"
#include "fuzzbound/dbsim.hpp"
#include "fuzzbound/fuzzy.hpp"
#include "fuzzbound/lattice.hpp"

namespace fuzzbound::oracle {

/// [phi_0, ..., phi_k] by full dense loops, with no early exit.
///
///   phi_i(x,x') = phi_{i-1}(x,x')
///               /\ inf_s inf_y  (delta_s(x,y)   => sup_y' delta'_s(x',y') * phi_{i-1}(y,y'))
///              [/\ inf_s inf_y' (delta'_s(x',y') => sup_y  delta_s(x,y)   * phi_{i-1}(y,y'))]
template <ResiduatedLattice L>
std::vector<FuzzyRelation> naive_dbsim(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, std::size_t k,
                                       Mode mode) {
  require_same_alphabet(a, ap);
  const std::size_t n = a.num_states();
  const std::size_t np = ap.num_states();
  std::vector<FuzzyRelation> delta, deltap;
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    delta.push_back(a.transition_relation(s));
    deltap.push_back(ap.transition_relation(s));
  }

  std::vector<FuzzyRelation> out;
  FuzzyRelation phi0(n, np);
  for (StateId x = 0; x < n; ++x)
    for (StateId xp = 0; xp < np; ++xp)
      phi0(x, xp) = mode == Mode::simulation ? l.residuum(a.terminal()[x], ap.terminal()[xp])
                                             : biresiduum(l, a.terminal()[x], ap.terminal()[xp]);
  out.push_back(std::move(phi0));

  for (std::size_t i = 1; i <= k; ++i) {
    const FuzzyRelation& prev = out.back();
    FuzzyRelation next = prev;
    for (StateId x = 0; x < n; ++x) {
      for (StateId xp = 0; xp < np; ++xp) {
        Degree v = prev(x, xp);
        for (SymbolId s = 0; s < delta.size(); ++s) {
          for (StateId y = 0; y < n; ++y) {
            Degree sup = Degree::zero();
            for (StateId yp = 0; yp < np; ++yp) sup = join(sup, l.tnorm(deltap[s](xp, yp), prev(y, yp)));
            v = meet(v, l.residuum(delta[s](x, y), sup));
          }
          if (mode == Mode::bisimulation) {
            for (StateId yp = 0; yp < np; ++yp) {
              Degree sup = Degree::zero();
              for (StateId y = 0; y < n; ++y) sup = join(sup, l.tnorm(delta[s](x, y), prev(y, yp)));
              v = meet(v, l.residuum(deltap[s](xp, yp), sup));
            }
          }
        }
        next(x, xp) = v;
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

struct LanguageViolation {
  /// Unset for the whole-automaton (norm) inequality.
  std::optional<StateId> x;
  std::optional<StateId> xp;
  Word word;
  Degree lhs;
  Degree rhs;
};

struct LanguageReport {
  bool ok = true;
  std::vector<LanguageViolation> violations;
};

namespace detail {

template <ResiduatedLattice L>
Degree word_degree(const L& l, Mode mode, Degree u, Degree v) {
  return mode == Mode::simulation ? l.residuum(u, v) : biresiduum(l, u, v);
}

// Minimum of word_degree over the two bounded languages, and its argmin.
template <ResiduatedLattice L>
std::pair<Degree, Word> language_degree(const L& l, Mode mode, const BoundedLanguage& lhs,
                                        const BoundedLanguage& rhs) {
  Degree best = Degree::one();
  Word witness;
  for (const auto& [w, d] : lhs) {
    const Degree v = word_degree(l, mode, d, rhs.at(w));
    if (v < best) {
      best = v;
      witness = w;
    }
  }
  return {best, witness};
}

template <ResiduatedLattice L>
LanguageReport verify_language(const L& l, Mode mode, const FuzzyAutomaton& a, const FuzzyAutomaton& ap,
                               const FuzzyRelation& phi_n, std::size_t n, std::uint64_t cap) {
  require_same_alphabet(a, ap);
  if (phi_n.rows() != a.num_states() || phi_n.cols() != ap.num_states()) {
    throw DimensionMismatch("relation shape does not match the automata");
  }
  std::vector<BoundedLanguage> langs, langsp;
  for (StateId x = 0; x < a.num_states(); ++x) langs.push_back(language_bounded(l, pin_initial(a, x), n, cap));
  for (StateId xp = 0; xp < ap.num_states(); ++xp)
    langsp.push_back(language_bounded(l, pin_initial(ap, xp), n, cap));

  LanguageReport report;
  for (StateId x = 0; x < a.num_states(); ++x) {
    for (StateId xp = 0; xp < ap.num_states(); ++xp) {
      const auto [bound, witness] = language_degree(l, mode, langs[x], langsp[xp]);
      if (!leq(l, phi_n(x, xp), bound)) {
        report.violations.push_back(LanguageViolation{x, xp, witness, phi_n(x, xp), bound});
      }
    }
  }

  const Degree norm = mode == Mode::simulation ? sim_norm(l, phi_n, a, ap) : bisim_norm(l, phi_n, a, ap);
  const auto [bound, witness] =
      language_degree(l, mode, language_bounded(l, a, n, cap), language_bounded(l, ap, n, cap));
  if (!leq(l, norm, bound)) {
    report.violations.push_back(LanguageViolation{std::nullopt, std::nullopt, witness, norm, bound});
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace detail

/// phi_n(x,x') <= S(L<=n(A_x), L<=n(A'_x')) for every pair, and
/// ||phi_n|| <= S(L<=n(A), L<=n(A')).
template <ResiduatedLattice L>
LanguageReport verify_language_preservation(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap,
                                            const FuzzyRelation& phi_n, std::size_t n,
                                            std::uint64_t cap = kDefaultWordCap) {
  return detail::verify_language(l, Mode::simulation, a, ap, phi_n, n, cap);
}

/// Same with equality degrees E and the bisimulation norm.
template <ResiduatedLattice L>
LanguageReport verify_language_invariance(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap,
                                          const FuzzyRelation& phi_n, std::size_t n,
                                          std::uint64_t cap = kDefaultWordCap) {
  return detail::verify_language(l, Mode::bisimulation, a, ap, phi_n, n, cap);
}

struct RandomAutomatonSpec {
  std::size_t num_states = 3;
  std::size_t num_symbols = 1;
  /// Probability that a given (x, s, y) carries a transition.
  double transition_density = 0.5;
  std::vector<Degree> degree_grid = default_grid();
  std::uint64_t seed = 0;

  static std::vector<Degree> default_grid() {
    std::vector<Degree> g;
    for (int i = 1; i <= 10; ++i) g.emplace_back(i / 10.0);
    return g;
  }
};

/// Deterministic per seed. Initial and terminal degrees are drawn from the
/// grid extended with 0.
inline FuzzyAutomaton generate_automaton(const RandomAutomatonSpec& spec) {
  if (spec.num_states == 0 || spec.num_symbols == 0) throw InvalidAutomaton("counts must be at least 1");
  if (spec.degree_grid.empty()) throw InvalidAutomaton("degree grid must not be empty");
  std::mt19937_64 rng(spec.seed);
  auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto grid_pick = [&] { return spec.degree_grid[rng() % spec.degree_grid.size()]; };
  auto maybe_zero = [&] { return rng() % (spec.degree_grid.size() + 1) == 0 ? Degree::zero() : grid_pick(); };

  std::vector<std::string> alphabet;
  for (std::size_t s = 0; s < spec.num_symbols; ++s) alphabet.push_back("s" + std::to_string(s));

  FuzzySet init(spec.num_states), term(spec.num_states);
  for (std::size_t x = 0; x < spec.num_states; ++x) {
    init[x] = maybe_zero();
    term[x] = maybe_zero();
  }
  std::vector<Transition> ts;
  for (SymbolId s = 0; s < spec.num_symbols; ++s) {
    for (StateId x = 0; x < spec.num_states; ++x) {
      for (StateId y = 0; y < spec.num_states; ++y) {
        if (uniform01() < spec.transition_density) {
          const Degree d = grid_pick();
          if (d > Degree::zero()) ts.push_back(Transition{x, s, y, d});
        }
      }
    }
  }
  return FuzzyAutomaton(std::move(alphabet), spec.num_states, std::move(init), std::move(term), ts);
}

}  // namespace fuzzbound::oracle
