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
 * @file logic.hpp
 * @brief Fuzzy Hennessy-Milner formulas over an automaton's alphabet.
 *
 * Concrete syntax (whitespace-insensitive):
 *
 *   F ::= T                 terminal degree
 *       | (sym . F)         sup over s-successors
 *       | (num -> F)        residuum num => F
 *       | (num <-> F)       biresiduum num <=> F
 *       | (F & F)           meet
 *
 * `->` formulas form the implication dialect, `<->` formulas the
 * equivalence dialect; T, `.` and `&` belong to both.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzbound/automata.hpp"
#include "fuzzbound/error.hpp"
#include "fuzzbound/fuzzy.hpp"
#include "fuzzbound/lattice.hpp"

namespace fuzzbound {

enum class Dialect { implication, equivalence };

class Formula {
 public:
  enum class Kind { tau, diamond, implies, equiv, conj };

  static Formula tau() { return Formula(Node{Kind::tau, {}, {}, nullptr, nullptr}); }
  static Formula diamond(std::string symbol, Formula child) {
    return Formula(Node{Kind::diamond, std::move(symbol), {}, share(std::move(child)), nullptr});
  }
  static Formula implies(Degree c, Formula child) {
    return Formula(Node{Kind::implies, {}, c, share(std::move(child)), nullptr});
  }
  static Formula equiv(Degree c, Formula child) {
    return Formula(Node{Kind::equiv, {}, c, share(std::move(child)), nullptr});
  }
  static Formula conj(Formula left, Formula right) {
    return Formula(Node{Kind::conj, {}, {}, share(std::move(left)), share(std::move(right))});
  }

  Kind kind() const { return node_->kind; }
  const std::string& symbol() const { return node_->symbol; }
  Degree constant() const { return node_->constant; }
  /// Operand of diamond/implies/equiv; left operand of conj.
  const Formula& child() const { return *node_->first; }
  const Formula& left() const { return *node_->first; }
  const Formula& right() const { return *node_->second; }

  std::size_t size() const {
    switch (kind()) {
      case Kind::tau: return 1;
      case Kind::conj: return 1 + left().size() + right().size();
      default: return 1 + child().size();
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::tau: return true;
      case Kind::diamond: return a.symbol() == b.symbol() && a.child() == b.child();
      case Kind::implies:
      case Kind::equiv: return a.constant() == b.constant() && a.child() == b.child();
      case Kind::conj: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
  }

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    Degree constant;
    std::shared_ptr<const Formula> first;
    std::shared_ptr<const Formula> second;
  };

  explicit Formula(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  static std::shared_ptr<const Formula> share(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

  std::shared_ptr<const Node> node_;
};

/// Nesting depth of the diamond operator.
inline std::size_t formula_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::tau: return 0;
    case Formula::Kind::diamond: return 1 + formula_depth(f.child());
    case Formula::Kind::implies:
    case Formula::Kind::equiv: return formula_depth(f.child());
    case Formula::Kind::conj: return std::max(formula_depth(f.left()), formula_depth(f.right()));
  }
  return 0;
}

inline bool in_dialect(const Formula& f, Dialect d) {
  switch (f.kind()) {
    case Formula::Kind::tau: return true;
    case Formula::Kind::diamond: return in_dialect(f.child(), d);
    case Formula::Kind::implies: return d == Dialect::implication && in_dialect(f.child(), d);
    case Formula::Kind::equiv: return d == Dialect::equivalence && in_dialect(f.child(), d);
    case Formula::Kind::conj: return in_dialect(f.left(), d) && in_dialect(f.right(), d);
  }
  return false;
}

namespace detail {
inline std::string format_constant(Degree c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", c.value());
  return buf;
}
}  // namespace detail

inline std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::tau: return "T";
    case Formula::Kind::diamond: return "(" + f.symbol() + " . " + to_string(f.child()) + ")";
    case Formula::Kind::implies: return "(" + detail::format_constant(f.constant()) + " -> " + to_string(f.child()) + ")";
    case Formula::Kind::equiv: return "(" + detail::format_constant(f.constant()) + " <-> " + to_string(f.child()) + ")";
    case Formula::Kind::conj: return "(" + to_string(f.left()) + " & " + to_string(f.right()) + ")";
  }
  return {};
}

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("formula: " + what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!consume(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected a symbol name");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Degree number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                                   text_[pos_] == 'e' || text_[pos_] == 'E' ||
                                   ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
                                    (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    const std::string tok(text_.substr(start, pos_ - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number");
    }
    if (used != tok.size()) {
      pos_ = start;
      fail("malformed number");
    }
    if (!(v >= 0.0 && v <= 1.0)) {
      pos_ = start;
      fail("constant " + tok + " is outside [0,1]");
    }
    return Degree(v);
  }

  Formula parse() {
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      return parse_parenthesized();
    }
    if (c == 'T') {
      const std::size_t save = pos_;
      const std::string id = identifier();
      if (id == "T") return Formula::tau();
      pos_ = save;
    }
    fail("expected 'T' or '('");
  }

  Formula parse_parenthesized() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const Degree k = number();
      Formula::Kind kind;
      if (consume("<->")) {
        kind = Formula::Kind::equiv;
      } else if (consume("->")) {
        kind = Formula::Kind::implies;
      } else {
        fail("expected '->' or '<->' after a constant");
      }
      Formula body = parse();
      expect(")");
      return kind == Formula::Kind::equiv ? Formula::equiv(k, std::move(body))
                                          : Formula::implies(k, std::move(body));
    }
    if (ident_start(c)) {
      const std::size_t save = pos_;
      std::string id = identifier();
      if (consume(".")) {
        Formula body = parse();
        expect(")");
        return Formula::diamond(std::move(id), std::move(body));
      }
      // Not a diamond: must be the left operand of a conjunction.
      pos_ = save;
    }
    Formula lhs = parse();
    expect("&");
    Formula rhs = parse();
    expect(")");
    return Formula::conj(std::move(lhs), std::move(rhs));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError (with a character offset) on malformed input.
inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse_all(); }

/// alpha^A as a fuzzy set over the states of `a`.
template <ResiduatedLattice L>
FuzzySet eval_formula(const L& l, const FuzzyAutomaton& a, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::tau: return a.terminal();
    case Formula::Kind::diamond: {
      const SymbolId s = a.symbol_id(f.symbol());
      const FuzzySet inner = eval_formula(l, a, f.child());
      FuzzySet out(a.num_states());
      for (const Arc& arc : a.arcs(s)) {
        out[arc.source] = join(out[arc.source], l.tnorm(arc.degree, inner[arc.target]));
      }
      return out;
    }
    case Formula::Kind::implies:
    case Formula::Kind::equiv: {
      FuzzySet out = eval_formula(l, a, f.child());
      for (std::size_t x = 0; x < out.size(); ++x) {
        out[x] = f.kind() == Formula::Kind::implies ? l.residuum(f.constant(), out[x])
                                                    : biresiduum(l, f.constant(), out[x]);
      }
      return out;
    }
    case Formula::Kind::conj: {
      FuzzySet out = eval_formula(l, a, f.left());
      const FuzzySet rhs = eval_formula(l, a, f.right());
      for (std::size_t x = 0; x < out.size(); ++x) out[x] = meet(out[x], rhs[x]);
      return out;
    }
  }
  return FuzzySet(a.num_states());
}

inline constexpr std::size_t kMaxRandomFormulaSize = 64;

/// Deterministic random formula of the given dialect with diamond depth at
/// most max_depth and at most 64 nodes. Symbols come from `alphabet`,
/// constants from `constant_pool`.
inline Formula random_formula(Dialect dialect, std::size_t max_depth, std::span<const std::string> alphabet,
                              std::span<const Degree> constant_pool, std::uint64_t seed) {
  if (constant_pool.empty()) throw DimensionMismatch("constant pool must not be empty");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::size_t budget = kMaxRandomFormulaSize;

  auto gen = [&](auto&& self, std::size_t depth_left) -> Formula {
    // Every node consumes budget; a conjunction reserves room for both sides.
    --budget;
    const bool can_dia = depth_left > 0 && !alphabet.empty() && budget >= 1;
    const bool can_unary = budget >= 1;
    const bool can_conj = budget >= 2;
    // 0 tau, 1 diamond, 2 constant, 3 conj
    std::vector<int> choices{0};
    if (can_dia) choices.insert(choices.end(), {1, 1, 1});
    if (can_unary) choices.insert(choices.end(), {2, 2});
    if (can_conj) choices.push_back(3);
    switch (choices[pick(choices.size())]) {
      case 1: return Formula::diamond(alphabet[pick(alphabet.size())], self(self, depth_left - 1));
      case 2: {
        const Degree c = constant_pool[pick(constant_pool.size())];
        Formula body = self(self, depth_left);
        return dialect == Dialect::implication ? Formula::implies(c, std::move(body))
                                               : Formula::equiv(c, std::move(body));
      }
      case 3: {
        --budget;  // reserve the right operand
        Formula lhs = self(self, depth_left);
        ++budget;
        Formula rhs = self(self, depth_left);
        return Formula::conj(std::move(lhs), std::move(rhs));
      }
      default: return Formula::tau();
    }
  };
  return gen(gen, max_depth);
}

/// Degrees occurring in either automaton plus {0, 0.5, 1}, sorted and unique.
inline std::vector<Degree> automaton_constant_pool(const FuzzyAutomaton& a, const FuzzyAutomaton& ap) {
  std::set<Degree> pool{Degree::zero(), Degree(0.5), Degree::one()};
  for (const FuzzyAutomaton* m : {&a, &ap}) {
    for (Degree d : m->initial()) pool.insert(d);
    for (Degree d : m->terminal()) pool.insert(d);
    for (const Transition& t : m->transitions()) pool.insert(t.degree);
  }
  return {pool.begin(), pool.end()};
}

namespace detail {
inline void require_formula(const Formula& f, Dialect d, std::size_t n) {
  if (!in_dialect(f, d)) {
    throw DialectError(std::string("formula is not in the ") +
                       (d == Dialect::implication ? "implication" : "equivalence") + " dialect");
  }
  if (formula_depth(f) > n) {
    throw DialectError("formula depth " + std::to_string(formula_depth(f)) + " exceeds relation depth " +
                       std::to_string(n));
  }
}
}  // namespace detail

/// phi_n^-1 o alpha^A <= alpha^A' for an implication-dialect formula of
/// depth <= n.
template <ResiduatedLattice L>
bool hm_check_sim(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, const FuzzyRelation& phi_n,
                  std::size_t n, const Formula& f) {
  detail::require_formula(f, Dialect::implication, n);
  const FuzzySet va = eval_formula(l, a, f);
  const FuzzySet vap = eval_formula(l, ap, f);
  return set_leq(l, compose(l, inverse(phi_n), va), vap);
}

/// Both directions: phi_n^-1 o alpha^A <= alpha^A' and phi_n o alpha^A' <= alpha^A.
template <ResiduatedLattice L>
bool hm_check_bisim(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, const FuzzyRelation& phi_n,
                    std::size_t n, const Formula& f) {
  detail::require_formula(f, Dialect::equivalence, n);
  const FuzzySet va = eval_formula(l, a, f);
  const FuzzySet vap = eval_formula(l, ap, f);
  return set_leq(l, compose(l, inverse(phi_n), va), vap) && set_leq(l, compose(l, phi_n, vap), va);
}

/// Pointwise form: phi(x,x') <= alpha^A(x) => alpha^A'(x') (implication
/// dialect) or <=> (equivalence dialect) for every pair.
template <ResiduatedLattice L>
bool hm_pointwise_bound(const L& l, const FuzzyAutomaton& a, const FuzzyAutomaton& ap, const FuzzyRelation& phi,
                        const Formula& f, Dialect d) {
  const FuzzySet va = eval_formula(l, a, f);
  const FuzzySet vap = eval_formula(l, ap, f);
  for (StateId x = 0; x < a.num_states(); ++x) {
    for (StateId xp = 0; xp < ap.num_states(); ++xp) {
      const Degree bound = d == Dialect::implication ? l.residuum(va[x], vap[xp]) : biresiduum(l, va[x], vap[xp]);
      if (!leq(l, phi(x, xp), bound)) return false;
    }
  }
  return true;
}

}  // namespace fuzzbound
