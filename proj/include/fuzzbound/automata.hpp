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
 * @file automata.hpp
 * @brief Finite fuzzy automata, their recognized languages and the
 *        successor/predecessor adjacency used by the simulation algorithms.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "fuzzbound/error.hpp"
#include "fuzzbound/fuzzy.hpp"
#include "fuzzbound/lattice.hpp"

namespace fuzzbound {

using StateId = std::size_t;
using SymbolId = std::size_t;
using Word = std::vector<SymbolId>;

struct Transition {
  StateId from;
  SymbolId symbol;
  StateId to;
  Degree degree;
};

/// One stored entry of delta_s: source -> target with a positive degree.
struct Arc {
  StateId source;
  StateId target;
  Degree degree;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Adjacency entry (other endpoint, degree).
struct Edge {
  StateId state;
  Degree degree;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class FuzzyAutomaton {
 public:
  FuzzyAutomaton(std::vector<std::string> alphabet, std::size_t num_states, FuzzySet initial, FuzzySet terminal,
                 const std::vector<Transition>& transitions, std::vector<std::string> state_names = {})
      : alphabet_(std::move(alphabet)),
        num_states_(num_states),
        initial_(std::move(initial)),
        terminal_(std::move(terminal)),
        arcs_(alphabet_.size()),
        state_names_(std::move(state_names)) {
    if (num_states_ == 0) throw InvalidAutomaton("an automaton needs at least one state");
    if (initial_.size() != num_states_ || terminal_.size() != num_states_) {
      throw InvalidAutomaton("initial/terminal sets must have one degree per state");
    }
    {
      std::set<std::string_view> seen;
      for (const auto& s : alphabet_)
        if (!seen.insert(s).second) throw InvalidAutomaton("duplicate symbol '" + s + "'");
    }
    if (state_names_.empty()) {
      state_names_.reserve(num_states_);
      for (std::size_t i = 0; i < num_states_; ++i) state_names_.push_back(std::to_string(i));
    } else if (state_names_.size() != num_states_) {
      throw InvalidAutomaton("state name table has the wrong length");
    }
    std::set<std::tuple<SymbolId, StateId, StateId>> seen;
    for (const Transition& t : transitions) {
      if (t.symbol >= alphabet_.size()) throw InvalidAutomaton("transition symbol out of range");
      if (t.from >= num_states_ || t.to >= num_states_) throw InvalidAutomaton("transition state out of range");
      if (t.degree == Degree::zero()) throw InvalidAutomaton("transition degrees must be positive");
      if (!seen.emplace(t.symbol, t.from, t.to).second) {
        throw InvalidAutomaton("duplicate transition " + state_names_[t.from] + " -" + alphabet_[t.symbol] +
                               "-> " + state_names_[t.to]);
      }
      arcs_[t.symbol].push_back(Arc{t.from, t.to, t.degree});
    }
  }

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_symbols() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& state_names() const noexcept { return state_names_; }
  const FuzzySet& initial() const noexcept { return initial_; }
  const FuzzySet& terminal() const noexcept { return terminal_; }

  /// Stored entries of delta_s, in insertion order.
  const std::vector<Arc>& arcs(SymbolId s) const { return arcs_.at(s); }

  std::size_t num_transitions() const noexcept {
    std::size_t m = 0;
    for (const auto& a : arcs_) m += a.size();
    return m;
  }

  std::vector<Transition> transitions() const {
    std::vector<Transition> out;
    for (SymbolId s = 0; s < arcs_.size(); ++s)
      for (const Arc& a : arcs_[s]) out.push_back(Transition{a.source, s, a.target, a.degree});
    return out;
  }

  SymbolId symbol_id(std::string_view name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
    return static_cast<SymbolId>(it - alphabet_.begin());
  }

  StateId state_id(std::string_view name) const {
    auto it = std::find(state_names_.begin(), state_names_.end(), name);
    if (it == state_names_.end()) throw IndexOutOfRange("unknown state '" + std::string(name) + "'");
    return static_cast<StateId>(it - state_names_.begin());
  }

  /// delta_s as a dense relation.
  FuzzyRelation transition_relation(SymbolId s) const {
    FuzzyRelation r(num_states_, num_states_);
    for (const Arc& a : arcs(s)) r(a.source, a.target) = a.degree;
    return r;
  }

  /// Same automaton with the symbols renumbered to follow `order`, which
  /// must be a permutation of the current alphabet.
  FuzzyAutomaton with_alphabet_order(const std::vector<std::string>& order) const {
    if (order.size() != alphabet_.size()) throw AlphabetMismatch("alphabets have different sizes");
    std::vector<Transition> ts;
    for (Transition t : transitions()) {
      auto it = std::find(order.begin(), order.end(), alphabet_[t.symbol]);
      if (it == order.end()) throw AlphabetMismatch("symbol '" + alphabet_[t.symbol] + "' missing from alphabet");
      t.symbol = static_cast<SymbolId>(it - order.begin());
      ts.push_back(t);
    }
    for (const auto& s : order)
      if (std::find(alphabet_.begin(), alphabet_.end(), s) == alphabet_.end())
        throw AlphabetMismatch("symbol '" + s + "' missing from alphabet");
    return FuzzyAutomaton(order, num_states_, initial_, terminal_, ts, state_names_);
  }

  FuzzyAutomaton with_initial(FuzzySet initial) const {
    FuzzyAutomaton copy = *this;
    if (initial.size() != num_states_) throw DimensionMismatch("initial set has the wrong size");
    copy.initial_ = std::move(initial);
    return copy;
  }

 private:
  std::vector<std::string> alphabet_;
  std::size_t num_states_;
  FuzzySet initial_;
  FuzzySet terminal_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::string> state_names_;
};

/// Throws AlphabetMismatch unless both automata list the same symbols in the
/// same order.
inline void require_same_alphabet(const FuzzyAutomaton& a, const FuzzyAutomaton& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch("automata are over different alphabets");
}

/// succ[s][x] lists (y, d) with d = delta_s(x,y) > 0; pred[s][y] lists (x, d).
struct SuccPredIndex {
  std::vector<std::vector<std::vector<Edge>>> succ;
  std::vector<std::vector<std::vector<Edge>>> pred;
};

/// O(m + n) construction of both adjacency views.
inline SuccPredIndex build_index(const FuzzyAutomaton& a) {
  SuccPredIndex idx;
  const std::size_t n = a.num_states();
  idx.succ.assign(a.num_symbols(), std::vector<std::vector<Edge>>(n));
  idx.pred.assign(a.num_symbols(), std::vector<std::vector<Edge>>(n));
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    for (const Arc& arc : a.arcs(s)) {
      idx.succ[s][arc.source].push_back(Edge{arc.target, arc.degree});
      idx.pred[s][arc.target].push_back(Edge{arc.source, arc.degree});
    }
  }
  return idx;
}

/// Splits a space-separated list of symbol names.
inline Word parse_word(const FuzzyAutomaton& a, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.push_back(a.symbol_id(tok));
  return w;
}

inline std::string word_to_string(const FuzzyAutomaton& a, const Word& w) {
  std::string out;
  for (SymbolId s : w) {
    if (!out.empty()) out += ' ';
    out += a.alphabet().at(s);
  }
  return out;
}

namespace detail {
// f o delta_s using the sparse arcs.
template <ResiduatedLattice L>
FuzzySet step_forward(const L& l, const FuzzyAutomaton& a, const FuzzySet& f, SymbolId s) {
  FuzzySet out(a.num_states());
  for (const Arc& arc : a.arcs(s)) {
    out[arc.target] = join(out[arc.target], l.tnorm(f[arc.source], arc.degree));
  }
  return out;
}

template <ResiduatedLattice L>
Degree accept(const L& l, const FuzzySet& f, const FuzzySet& terminal) {
  Degree r = Degree::zero();
  for (std::size_t x = 0; x < f.size(); ++x) r = join(r, l.tnorm(f[x], terminal[x]));
  return r;
}
}  // namespace detail

/// L(A)(w) = sigma o delta_{w1} o ... o delta_{wn} o tau, evaluated left to right.
template <ResiduatedLattice L>
Degree language_eval(const L& l, const FuzzyAutomaton& a, const Word& w) {
  FuzzySet cur = a.initial();
  for (SymbolId s : w) {
    if (s >= a.num_symbols()) throw UnknownSymbol("symbol index " + std::to_string(s) + " out of range");
    cur = detail::step_forward(l, a, cur, s);
  }
  return detail::accept(l, cur, a.terminal());
}

inline constexpr std::uint64_t kDefaultWordCap = 1'000'000;

using BoundedLanguage = std::map<Word, Degree>;

/// Every word of length <= max_len with its degree (zero degrees included).
/// Throws ResourceCapExceeded when |alphabet|^(max_len+1) exceeds `cap`.
template <ResiduatedLattice L>
BoundedLanguage language_bounded(const L& l, const FuzzyAutomaton& a, std::size_t max_len,
                                 std::uint64_t cap = kDefaultWordCap) {
  const std::uint64_t k = a.num_symbols();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i <= max_len && k > 1; ++i) {
    if (count > cap / k) throw ResourceCapExceeded("bounded language would enumerate more than " +
                                                   std::to_string(cap) + " words");
    count *= k;
  }
  BoundedLanguage out;
  std::vector<std::pair<Word, FuzzySet>> frontier{{Word{}, a.initial()}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& [w, vec] : frontier) out.emplace(w, detail::accept(l, vec, a.terminal()));
    if (len == max_len) break;
    std::vector<std::pair<Word, FuzzySet>> next;
    next.reserve(frontier.size() * a.num_symbols());
    for (const auto& [w, vec] : frontier) {
      for (SymbolId s = 0; s < a.num_symbols(); ++s) {
        Word w2 = w;
        w2.push_back(s);
        next.emplace_back(std::move(w2), detail::step_forward(l, a, vec, s));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Copy of `a` whose only initial state is x, with degree 1.
inline FuzzyAutomaton pin_initial(const FuzzyAutomaton& a, StateId x) {
  if (x >= a.num_states()) throw IndexOutOfRange("state " + std::to_string(x) + " out of range");
  FuzzySet init(a.num_states());
  init[x] = Degree::one();
  return a.with_initial(std::move(init));
}

/// ||phi|| = S(sigma, sigma' o phi^-1).
template <ResiduatedLattice L>
Degree sim_norm(const L& l, const FuzzyRelation& phi, const FuzzyAutomaton& a, const FuzzyAutomaton& ap) {
  if (phi.rows() != a.num_states() || phi.cols() != ap.num_states()) {
    throw DimensionMismatch("relation shape does not match the automata");
  }
  return subset_degree(l, a.initial(), compose(l, phi, ap.initial()));
}

/// ||phi|| meet ||phi^-1|| taken in the reverse direction.
template <ResiduatedLattice L>
Degree bisim_norm(const L& l, const FuzzyRelation& phi, const FuzzyAutomaton& a, const FuzzyAutomaton& ap) {
  return meet(sim_norm(l, phi, a, ap), sim_norm(l, inverse(phi), ap, a));
}

}  // namespace fuzzbound
