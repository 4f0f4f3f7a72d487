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
 * @file dbsim.hpp
 * @brief Depth-bounded fuzzy simulations and bisimulations.
 *
 * A depth-bounded fuzzy simulation between A and A' is a decreasing
 * sequence phi_0 >= phi_1 >= ... of relations A x A' -> [0,1] with
 *
 *   phi_0^-1 o tau            <= tau'
 *   phi_n^-1 o delta_s        <= delta'_s o phi_{n-1}^-1      (n >= 1)
 *
 * and a bisimulation additionally satisfies the mirrored conditions for
 * phi_n. compute_dbsim / compute_dbbisim build the greatest such sequence
 * up to a requested depth in O(k (m + n) n) time using the predecessor
 * lists of A (and A'), where m counts stored transitions and n states.
 *
 * The relation at depth n bounds how well words of length <= n are
 * preserved (simulation) or kept invariant (bisimulation); its infimum
 * over all n is the greatest fuzzy (bi)simulation for finite automata.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzbound/automata.hpp"
#include "fuzzbound/error.hpp"
#include "fuzzbound/fuzzy.hpp"
#include "fuzzbound/lattice.hpp"

namespace fuzzbound {

enum class Mode { simulation, bisimulation };

inline constexpr std::string_view to_string(Mode m) {
  return m == Mode::simulation ? "simulation" : "bisimulation";
}

/// Decreases at or below this are floating-point rounding, not progress.
inline constexpr double kRoundingSlack = 8 * std::numeric_limits<double>::epsilon();

enum class Convergence {
  depth_reached,   // requested depth computed without hitting a fixpoint
  exact_fixpoint,  // an iteration changed no entry beyond rounding (kRoundingSlack)
  tolerance,       // decreases fell below the tolerance but not to rounding level
  not_converged,   // iteration cap hit while still decreasing by more than tol
};

inline constexpr std::string_view to_string(Convergence c) {
  switch (c) {
    case Convergence::depth_reached: return "depth_reached";
    case Convergence::exact_fixpoint: return "exact_fixpoint";
    case Convergence::tolerance: return "tolerance";
    case Convergence::not_converged: return "not_converged";
  }
  return "unknown";
}

struct DbSimResult {
  Mode mode = Mode::simulation;
  /// Requested depth (or iteration cap for greatest_fixpoint).
  std::size_t k = 0;
  /// phi_0..phi_last when traced, otherwise just the final relation.
  std::vector<FuzzyRelation> prefix;
  bool traced = false;
  /// Iteration i whose pass changed nothing beyond eps; phi_j = phi_i for j >= i.
  std::optional<std::size_t> fixpoint_at;
  /// ||phi_i|| for every computed i (simulation or bisimulation norm per mode).
  std::vector<Degree> per_step_norms;
  Convergence status = Convergence::depth_reached;
  /// Largest entrywise decrease in the last executed iteration.
  double last_change = 0.0;

  /// The relation returned by the algorithm (phi_k, or the fixpoint).
  const FuzzyRelation& phi() const { return prefix.back(); }

  /// Index of the last relation actually computed.
  std::size_t last_index() const { return per_step_norms.empty() ? 0 : per_step_norms.size() - 1; }

  /// phi_n from a traced run; indices past a fixpoint map to the fixpoint.
  const FuzzyRelation& component(std::size_t n) const {
    if (!traced) throw IndexOutOfRange("component() requires a traced result");
    if (n < prefix.size()) return prefix[n];
    if (fixpoint_at) return prefix.back();
    throw IndexOutOfRange("depth " + std::to_string(n) + " was not computed");
  }

  /// Meet of the per-step norms: the exact norm of the whole sequence once
  /// a fixpoint was reached, an upper bound otherwise.
  Degree prefix_norm() const { return meet_all(per_step_norms); }
};

namespace detail {

template <ResiduatedLattice L>
Degree mode_norm(const L& l, Mode mode, const FuzzyRelation& phi, const FuzzyAutomaton& a,
                 const FuzzyAutomaton& ap) {
  return mode == Mode::simulation ? sim_norm(l, phi, a, ap) : bisim_norm(l, phi, a, ap);
}

template <ResiduatedLattice L>
FuzzyRelation initial_relation(const L& l, Mode mode, const FuzzyAutomaton& a, const FuzzyAutomaton& ap) {
  FuzzyRelation phi(a.num_states(), ap.num_states());
  for (StateId x = 0; x < a.num_states(); ++x) {
    for (StateId xp = 0; xp < ap.num_states(); ++xp) {
      const Degree t = a.terminal()[x];
      const Degree tp = ap.terminal()[xp];
      phi(x, xp) = mode == Mode::simulation ? l.residuum(t, tp) : biresiduum(l, t, tp);
    }
  }
  return phi;
}

struct StepOutcome {
  bool changed = false;
  double max_decrease = 0.0;
};

// Lowers phi(x, x') to r; returns the decrease.
inline void lower(Degree& entry, Degree r, double eps, StepOutcome& out) {
  if (entry > r) {
    const double dec = entry.value() - r.value();
    entry = r;
    out.max_decrease = std::max(out.max_decrease, dec);
    if (dec > eps) out.changed = true;
  }
}

// One pass of the main loop: phi enters as phi_{i-1} (copied into psi) and
// leaves as phi_i. Bounds are always read from psi.
template <ResiduatedLattice L>
StepOutcome refine_once(const L& l, Mode mode, const SuccPredIndex& idx, const SuccPredIndex& idxp,
                        FuzzyRelation& phi, FuzzyRelation& psi) {
  StepOutcome out;
  psi = phi;
  const std::size_t nsym = idx.succ.size();
  const std::size_t n = idx.succ.empty() ? 0 : idx.succ[0].size();
  const std::size_t np = idxp.succ.empty() ? 0 : idxp.succ[0].size();
  const double eps = l.eps();

  // phi^-1 o delta_s <= delta'_s o psi^-1
  for (SymbolId s = 0; s < nsym; ++s) {
    for (StateId xp = 0; xp < np; ++xp) {
      const auto& succp = idxp.succ[s][xp];
      for (StateId y = 0; y < n; ++y) {
        const auto& pred = idx.pred[s][y];
        if (pred.empty()) continue;
        Degree bound = Degree::zero();
        for (const Edge& e : succp) bound = join(bound, l.tnorm(e.degree, psi(y, e.state)));
        for (const Edge& e : pred) lower(phi(e.state, xp), l.residuum(e.degree, bound), eps, out);
      }
    }
  }
  if (mode == Mode::simulation) return out;

  // phi o delta'_s <= delta_s o psi
  for (SymbolId s = 0; s < nsym; ++s) {
    for (StateId x = 0; x < n; ++x) {
      const auto& succ = idx.succ[s][x];
      for (StateId yp = 0; yp < np; ++yp) {
        const auto& predp = idxp.pred[s][yp];
        if (predp.empty()) continue;
        Degree bound = Degree::zero();
        for (const Edge& e : succ) bound = join(bound, l.tnorm(e.degree, psi(e.state, yp)));
        for (const Edge& e : predp) lower(phi(x, e.state), l.residuum(e.degree, bound), eps, out);
      }
    }
  }
  return out;
}

template <ResiduatedLattice L>
DbSimResult run(const L& l, Mode mode, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, std::size_t steps,
                bool trace) {
  require_same_alphabet(a, ap);
  const SuccPredIndex idx = build_index(a);
  const SuccPredIndex idxp = build_index(ap);

  DbSimResult res;
  res.mode = mode;
  res.k = steps;
  res.traced = trace;

  FuzzyRelation phi = initial_relation(l, mode, a, ap);
  FuzzyRelation psi;
  res.per_step_norms.push_back(mode_norm(l, mode, phi, a, ap));
  if (trace) res.prefix.push_back(phi);

  for (std::size_t i = 1; i <= steps; ++i) {
    const StepOutcome step = refine_once(l, mode, idx, idxp, phi, psi);
    res.last_change = step.max_decrease;
    res.per_step_norms.push_back(mode_norm(l, mode, phi, a, ap));
    if (trace) res.prefix.push_back(phi);
    if (!step.changed) {
      res.fixpoint_at = i;
      res.status = step.max_decrease <= kRoundingSlack ? Convergence::exact_fixpoint : Convergence::tolerance;
      break;
    }
  }
  if (!trace) res.prefix.push_back(std::move(phi));
  return res;
}

}  // namespace detail

/// phi_k of the greatest depth-bounded fuzzy simulation between a and ap.
/// Stops early once an iteration changes no entry by more than eps.
template <ResiduatedLattice L>
DbSimResult compute_dbsim(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, std::size_t k,
                          bool trace = false) {
  return detail::run(l, Mode::simulation, a, ap, k, trace);
}

/// phi_k of the greatest depth-bounded fuzzy bisimulation between a and ap.
template <ResiduatedLattice L>
DbSimResult compute_dbbisim(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, std::size_t k,
                            bool trace = false) {
  return detail::run(l, Mode::bisimulation, a, ap, k, trace);
}

/// Iterates the depth-bounded refinement towards the greatest fuzzy
/// (bi)simulation. The status tells an exact fixpoint apart from a
/// tolerance-level stop and from hitting max_iters.
template <ResiduatedLattice L>
DbSimResult greatest_fixpoint(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, Mode mode,
                              std::size_t max_iters, double tol, bool trace = false) {
  if (max_iters == 0) throw IndexOutOfRange("max_iters must be at least 1");
  DbSimResult res = detail::run(l, mode, a, ap, max_iters, trace);
  if (!res.fixpoint_at) {
    res.status = res.last_change <= tol ? Convergence::tolerance : Convergence::not_converged;
  }
  return res;
}

/// Definition check: phi^-1 o tau <= tau' and phi^-1 o delta_s <= delta'_s o phi^-1.
template <ResiduatedLattice L>
bool check_sim(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, const FuzzyRelation& phi) {
  require_same_alphabet(a, ap);
  if (phi.rows() != a.num_states() || phi.cols() != ap.num_states()) {
    throw DimensionMismatch("relation shape does not match the automata");
  }
  const FuzzyRelation inv = inverse(phi);
  if (!set_leq(l, compose(l, inv, a.terminal()), ap.terminal())) return false;
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    const FuzzyRelation lhs = compose(l, inv, a.transition_relation(s));
    const FuzzyRelation rhs = compose(l, ap.transition_relation(s), inv);
    if (!rel_leq(l, lhs, rhs)) return false;
  }
  return true;
}

/// check_sim for phi and check_sim for phi^-1 in the reverse direction.
template <ResiduatedLattice L>
bool check_bisim(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, const FuzzyRelation& phi) {
  return check_sim(l, a, ap, phi) && check_sim(l, ap, a, inverse(phi));
}

namespace detail {
template <ResiduatedLattice L>
bool check_prefix_one_way(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap,
                          const std::vector<FuzzyRelation>& prefix) {
  const FuzzyRelation inv0 = inverse(prefix.front());
  if (!set_leq(l, compose(l, inv0, a.terminal()), ap.terminal())) return false;
  std::vector<FuzzyRelation> delta, deltap;
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    delta.push_back(a.transition_relation(s));
    deltap.push_back(ap.transition_relation(s));
  }
  for (std::size_t n = 1; n < prefix.size(); ++n) {
    if (!rel_leq(l, prefix[n], prefix[n - 1])) return false;
    const FuzzyRelation inv = inverse(prefix[n]);
    const FuzzyRelation inv_prev = inverse(prefix[n - 1]);
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      if (!rel_leq(l, compose(l, inv, delta[s]), compose(l, deltap[s], inv_prev))) return false;
    }
  }
  return true;
}

inline void require_prefix_shape(const FuzzyAutomaton& a, const FuzzyAutomaton& ap,
                                 const std::vector<FuzzyRelation>& prefix) {
  if (prefix.empty()) throw DimensionMismatch("prefix must contain at least phi_0");
  for (const auto& r : prefix) {
    if (r.rows() != a.num_states() || r.cols() != ap.num_states()) {
      throw DimensionMismatch("prefix relation shape does not match the automata");
    }
  }
}

inline std::vector<FuzzyRelation> invert_all(const std::vector<FuzzyRelation>& prefix) {
  std::vector<FuzzyRelation> out;
  out.reserve(prefix.size());
  for (const auto& r : prefix) out.push_back(inverse(r));
  return out;
}
}  // namespace detail

/// True iff the finite prefix phi_0..phi_k satisfies every depth-bounded
/// simulation condition that mentions only its members.
template <ResiduatedLattice L>
bool check_dbsim_prefix(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap,
                        const std::vector<FuzzyRelation>& prefix) {
  require_same_alphabet(a, ap);
  detail::require_prefix_shape(a, ap, prefix);
  return detail::check_prefix_one_way(l, a, ap, prefix);
}

template <ResiduatedLattice L>
bool check_dbbisim_prefix(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap,
                          const std::vector<FuzzyRelation>& prefix) {
  require_same_alphabet(a, ap);
  detail::require_prefix_shape(a, ap, prefix);
  return detail::check_prefix_one_way(l, a, ap, prefix) &&
         detail::check_prefix_one_way(l, ap, a, detail::invert_all(prefix));
}

/// Meet of ||phi_i|| over the prefix.
template <ResiduatedLattice L>
Degree dbsim_prefix_norm(const L& l, const std::vector<FuzzyRelation>& prefix, const FuzzyAutomaton& a,
                         const FuzzyAutomaton& ap, Mode mode) {
  if (prefix.empty()) throw DimensionMismatch("prefix must contain at least phi_0");
  Degree r = Degree::one();
  for (const auto& phi : prefix) r = meet(r, detail::mode_norm(l, mode, phi, a, ap));
  return r;
}

/// Componentwise composition of a prefix A->A' with a prefix A'->A''.
template <ResiduatedLattice L>
std::vector<FuzzyRelation> compose_prefixes(const L& l, const std::vector<FuzzyRelation>& p,
                                            const std::vector<FuzzyRelation>& q) {
  if (p.size() != q.size()) throw DimensionMismatch("prefixes have different lengths");
  std::vector<FuzzyRelation> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(compose(l, p[i], q[i]));
  return out;
}

}  // namespace fuzzbound
