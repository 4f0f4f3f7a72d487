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
 * @file fuzzy.hpp
 * @brief Fuzzy sets and dense fuzzy relations over 0-based index sets.
 *
 * Compositions are sup-t-norm products:
 *   (phi o psi)(a,c) = sup_b phi(a,b) * psi(b,c)
 *   (f o phi)(b)     = sup_a f(a) * phi(a,b)
 *   (phi o g)(a)     = sup_b phi(a,b) * g(b)
 * where * is the t-norm of the supplied structure.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fuzzbound/error.hpp"
#include "fuzzbound/lattice.hpp"

namespace fuzzbound {

class FuzzySet {
 public:
  FuzzySet() = default;
  explicit FuzzySet(std::size_t size) : degrees_(size) {}
  explicit FuzzySet(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {}

  static FuzzySet from_values(std::initializer_list<double> values) {
    std::vector<Degree> d;
    d.reserve(values.size());
    for (double v : values) d.emplace_back(v);
    return FuzzySet(std::move(d));
  }

  std::size_t size() const noexcept { return degrees_.size(); }
  Degree operator[](std::size_t i) const { return degrees_[i]; }
  Degree& operator[](std::size_t i) { return degrees_[i]; }
  Degree at(std::size_t i) const {
    if (i >= degrees_.size()) throw IndexOutOfRange("fuzzy set index " + std::to_string(i));
    return degrees_[i];
  }

  std::span<const Degree> degrees() const noexcept { return degrees_; }
  auto begin() const noexcept { return degrees_.begin(); }
  auto end() const noexcept { return degrees_.end(); }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  std::vector<Degree> degrees_;
};

/// Dense row-major fuzzy relation between {0..rows-1} and {0..cols-1}.
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  /// All-zero (empty) relation.
  FuzzyRelation(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), degrees_(rows * cols) {}

  static FuzzyRelation empty(std::size_t rows, std::size_t cols) { return FuzzyRelation(rows, cols); }

  static FuzzyRelation identity(std::size_t n) {
    FuzzyRelation r(n, n);
    for (std::size_t i = 0; i < n; ++i) r(i, i) = Degree::one();
    return r;
  }

  static FuzzyRelation from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    FuzzyRelation r(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != nc) throw DimensionMismatch("ragged relation rows");
      std::size_t j = 0;
      for (double v : row) r(i, j++) = Degree(v);
      ++i;
    }
    return r;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Degree operator()(std::size_t r, std::size_t c) const { return degrees_[r * cols_ + c]; }
  Degree& operator()(std::size_t r, std::size_t c) { return degrees_[r * cols_ + c]; }

  Degree at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
      throw IndexOutOfRange("relation index (" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
    return (*this)(r, c);
  }

  std::span<const Degree> row(std::size_t r) const { return {degrees_.data() + r * cols_, cols_}; }
  std::span<const Degree> degrees() const noexcept { return degrees_; }

  bool is_empty() const noexcept {
    return std::all_of(degrees_.begin(), degrees_.end(), [](Degree d) { return d == Degree::zero(); });
  }

  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Degree> degrees_;
};

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}
inline void require_same_shape(const FuzzyRelation& a, const FuzzyRelation& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("relation shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " differ");
  }
}
}  // namespace detail

template <ResiduatedLattice L>
FuzzyRelation compose(const L& l, const FuzzyRelation& phi, const FuzzyRelation& psi) {
  detail::require(phi.cols() == psi.rows(), "relation composition: inner dimensions differ");
  FuzzyRelation out(phi.rows(), psi.cols());
  for (std::size_t a = 0; a < phi.rows(); ++a) {
    for (std::size_t b = 0; b < phi.cols(); ++b) {
      const Degree left = phi(a, b);
      if (left == Degree::zero()) continue;
      for (std::size_t c = 0; c < psi.cols(); ++c) {
        out(a, c) = join(out(a, c), l.tnorm(left, psi(b, c)));
      }
    }
  }
  return out;
}

template <ResiduatedLattice L>
FuzzySet compose(const L& l, const FuzzySet& f, const FuzzyRelation& phi) {
  detail::require(f.size() == phi.rows(), "set-relation composition: dimensions differ");
  FuzzySet out(phi.cols());
  for (std::size_t a = 0; a < phi.rows(); ++a) {
    if (f[a] == Degree::zero()) continue;
    for (std::size_t b = 0; b < phi.cols(); ++b) out[b] = join(out[b], l.tnorm(f[a], phi(a, b)));
  }
  return out;
}

template <ResiduatedLattice L>
FuzzySet compose(const L& l, const FuzzyRelation& phi, const FuzzySet& g) {
  detail::require(g.size() == phi.cols(), "relation-set composition: dimensions differ");
  FuzzySet out(phi.rows());
  for (std::size_t a = 0; a < phi.rows(); ++a) {
    Degree acc = Degree::zero();
    for (std::size_t b = 0; b < phi.cols(); ++b) acc = join(acc, l.tnorm(phi(a, b), g[b]));
    out[a] = acc;
  }
  return out;
}

inline FuzzyRelation inverse(const FuzzyRelation& phi) {
  FuzzyRelation out(phi.cols(), phi.rows());
  for (std::size_t a = 0; a < phi.rows(); ++a)
    for (std::size_t b = 0; b < phi.cols(); ++b) out(b, a) = phi(a, b);
  return out;
}

/// S(g,f): the degree to which g is a subset of f.
template <ResiduatedLattice L>
Degree subset_degree(const L& l, const FuzzySet& g, const FuzzySet& f) {
  detail::require(g.size() == f.size(), "subset degree: sizes differ");
  Degree r = Degree::one();
  for (std::size_t i = 0; i < g.size(); ++i) r = meet(r, l.residuum(g[i], f[i]));
  return r;
}

/// E(g,f): the degree to which g equals f.
template <ResiduatedLattice L>
Degree equal_degree(const L& l, const FuzzySet& g, const FuzzySet& f) {
  detail::require(g.size() == f.size(), "equality degree: sizes differ");
  Degree r = Degree::one();
  for (std::size_t i = 0; i < g.size(); ++i) r = meet(r, biresiduum(l, g[i], f[i]));
  return r;
}

template <ResiduatedLattice L>
bool set_leq(const L& l, const FuzzySet& g, const FuzzySet& f) {
  detail::require(g.size() == f.size(), "set comparison: sizes differ");
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!leq(l, g[i], f[i])) return false;
  return true;
}

/// Pointwise phi <= psi within the structure's tolerance.
template <ResiduatedLattice L>
bool rel_leq(const L& l, const FuzzyRelation& phi, const FuzzyRelation& psi) {
  detail::require_same_shape(phi, psi);
  const auto a = phi.degrees();
  const auto b = psi.degrees();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!leq(l, a[i], b[i])) return false;
  return true;
}

inline FuzzyRelation rel_meet(const FuzzyRelation& phi, const FuzzyRelation& psi) {
  detail::require_same_shape(phi, psi);
  FuzzyRelation out(phi.rows(), phi.cols());
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (std::size_t c = 0; c < phi.cols(); ++c) out(r, c) = meet(phi(r, c), psi(r, c));
  return out;
}

inline FuzzyRelation rel_join(const FuzzyRelation& phi, const FuzzyRelation& psi) {
  detail::require_same_shape(phi, psi);
  FuzzyRelation out(phi.rows(), phi.cols());
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (std::size_t c = 0; c < phi.cols(); ++c) out(r, c) = join(phi(r, c), psi(r, c));
  return out;
}

/// Largest absolute entrywise difference.
inline double max_abs_diff(const FuzzyRelation& phi, const FuzzyRelation& psi) {
  detail::require_same_shape(phi, psi);
  double m = 0.0;
  const auto a = phi.degrees();
  const auto b = psi.degrees();
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i].value() - b[i].value()));
  return m;
}

template <ResiduatedLattice L>
bool rel_approx_equal(const L& l, const FuzzyRelation& phi, const FuzzyRelation& psi) {
  return max_abs_diff(phi, psi) <= l.eps();
}

template <ResiduatedLattice L>
bool is_reflexive(const L& l, const FuzzyRelation& phi) {
  detail::require(phi.rows() == phi.cols(), "reflexivity needs a relation on one set");
  return rel_leq(l, FuzzyRelation::identity(phi.rows()), phi);
}

template <ResiduatedLattice L>
bool is_symmetric(const L& l, const FuzzyRelation& phi) {
  detail::require(phi.rows() == phi.cols(), "symmetry needs a relation on one set");
  return rel_approx_equal(l, phi, inverse(phi));
}

template <ResiduatedLattice L>
bool is_transitive(const L& l, const FuzzyRelation& phi) {
  detail::require(phi.rows() == phi.cols(), "transitivity needs a relation on one set");
  return rel_leq(l, compose(l, phi, phi), phi);
}

}  // namespace fuzzbound
