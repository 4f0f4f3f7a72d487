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
 * @file lattice.hpp
 * @brief Residuated lattices on the unit interval.
 *
 * A structure supplies a t-norm and its residuum over Degree values. The
 * three classical continuous t-norms are provided as stateless policies
 * (Godel, Lukasiewicz, Product) and through the runtime-selectable
 * Structure class, which additionally accepts user-defined pairs. Every
 * algorithm in the library is a template over the ResiduatedLattice
 * concept, so either flavour can be plugged in.
 *
 * All built-in structures are linear and complete with a continuous
 * t-norm; custom structures are assumed to be as well.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "fuzzbound/error.hpp"

namespace fuzzbound {

inline constexpr double kDefaultEps = 1e-9;

/// A truth value in [0,1].
class Degree {
 public:
  constexpr Degree() noexcept = default;

  /// Throws InvalidDegree unless 0 <= value <= 1.
  explicit Degree(double value) : value_(checked(value)) {}

  static constexpr Degree zero() noexcept { return Degree{}; }
  static constexpr Degree one() noexcept {
    Degree d;
    d.value_ = 1.0;
    return d;
  }

  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Degree, Degree) noexcept = default;
  friend constexpr auto operator<=>(Degree a, Degree b) noexcept { return a.value_ <=> b.value_; }

 private:
  static double checked(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidDegree("degree " + std::to_string(v) + " is outside [0,1]");
    }
    return v;
  }

  double value_ = 0.0;
};

constexpr Degree meet(Degree a, Degree b) noexcept { return std::min(a, b); }
constexpr Degree join(Degree a, Degree b) noexcept { return std::max(a, b); }

/// Infimum of a finite family; the empty meet is 1.
inline Degree meet_all(std::span<const Degree> xs) noexcept {
  Degree r = Degree::one();
  for (Degree x : xs) r = meet(r, x);
  return r;
}

/// Supremum of a finite family; the empty join is 0.
inline Degree join_all(std::span<const Degree> xs) noexcept {
  Degree r = Degree::zero();
  for (Degree x : xs) r = join(r, x);
  return r;
}

template <class L>
concept ResiduatedLattice = requires(const L& l, Degree x, Degree y) {
  { l.tnorm(x, y) } -> std::same_as<Degree>;
  { l.residuum(x, y) } -> std::same_as<Degree>;
  { l.eps() } -> std::convertible_to<double>;
};

template <ResiduatedLattice L>
Degree biresiduum(const L& l, Degree x, Degree y) {
  return meet(l.residuum(x, y), l.residuum(y, x));
}

/// x <= y up to the structure's comparison tolerance.
template <ResiduatedLattice L>
bool leq(const L& l, Degree x, Degree y) {
  return x.value() <= y.value() + l.eps();
}

template <ResiduatedLattice L>
bool approx_equal(const L& l, Degree x, Degree y) {
  return std::abs(x.value() - y.value()) <= l.eps();
}

namespace detail {
// Results of the built-in operations are mathematically in [0,1]; the
// clamp only absorbs rounding at the edges.
inline Degree clamp_unit(double v) noexcept {
  return v <= 0.0 ? Degree::zero() : v >= 1.0 ? Degree::one() : Degree(v);
}
}  // namespace detail

struct Godel {
  double tolerance = kDefaultEps;

  static constexpr std::string_view name() { return "godel"; }
  double eps() const noexcept { return tolerance; }
  Degree tnorm(Degree x, Degree y) const noexcept { return std::min(x, y); }
  Degree residuum(Degree x, Degree y) const noexcept { return x <= y ? Degree::one() : y; }
};

struct Lukasiewicz {
  double tolerance = kDefaultEps;

  static constexpr std::string_view name() { return "lukasiewicz"; }
  double eps() const noexcept { return tolerance; }
  Degree tnorm(Degree x, Degree y) const noexcept {
    const double lo = std::min(x.value(), y.value());
    const double hi = std::max(x.value(), y.value());
    return detail::clamp_unit(lo - (1.0 - hi));
  }
  Degree residuum(Degree x, Degree y) const noexcept {
    if (x <= y) return Degree::one();
    return detail::clamp_unit(1.0 - x.value() + y.value());
  }
};

struct Product {
  double tolerance = kDefaultEps;

  static constexpr std::string_view name() { return "product"; }
  double eps() const noexcept { return tolerance; }
  Degree tnorm(Degree x, Degree y) const noexcept { return detail::clamp_unit(x.value() * y.value()); }
  Degree residuum(Degree x, Degree y) const noexcept {
    // x <= y covers x == 0
    if (x <= y) return Degree::one();
    return detail::clamp_unit(y.value() / x.value());
  }
};

enum class StructureKind { godel, lukasiewicz, product, custom };

/// Runtime-selected residuated lattice on [0,1].
class Structure {
 public:
  using BinaryOp = std::function<Degree(Degree, Degree)>;

  static Structure godel(double eps = kDefaultEps) { return Structure(StructureKind::godel, "godel", eps); }
  static Structure lukasiewicz(double eps = kDefaultEps) {
    return Structure(StructureKind::lukasiewicz, "lukasiewicz", eps);
  }
  static Structure product(double eps = kDefaultEps) { return Structure(StructureKind::product, "product", eps); }

  /// User-supplied t-norm/residuum pair. The adjunction between them is the
  /// caller's responsibility; check_axioms-style property tests are the
  /// intended way to validate one.
  static Structure custom(std::string name, BinaryOp tnorm, BinaryOp residuum, double eps = kDefaultEps) {
    Structure s(StructureKind::custom, std::move(name), eps);
    s.ops_ = std::make_shared<const CustomOps>(CustomOps{std::move(tnorm), std::move(residuum)});
    return s;
  }

  /// "godel" | "lukasiewicz" | "product"; throws UnknownStructure otherwise.
  static Structure from_name(std::string_view name, double eps = kDefaultEps) {
    if (name == "godel") return godel(eps);
    if (name == "lukasiewicz") return lukasiewicz(eps);
    if (name == "product") return product(eps);
    throw UnknownStructure("unknown structure '" + std::string(name) +
                           "' (expected godel, lukasiewicz or product)");
  }

  StructureKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  double eps() const noexcept { return eps_; }

  Structure with_eps(double eps) const {
    Structure s = *this;
    s.eps_ = eps;
    return s;
  }

  Degree tnorm(Degree x, Degree y) const {
    switch (kind_) {
      case StructureKind::godel: return Godel{}.tnorm(x, y);
      case StructureKind::lukasiewicz: return Lukasiewicz{}.tnorm(x, y);
      case StructureKind::product: return Product{}.tnorm(x, y);
      case StructureKind::custom: break;
    }
    return ops_->tnorm(x, y);
  }

  Degree residuum(Degree x, Degree y) const {
    switch (kind_) {
      case StructureKind::godel: return Godel{}.residuum(x, y);
      case StructureKind::lukasiewicz: return Lukasiewicz{}.residuum(x, y);
      case StructureKind::product: return Product{}.residuum(x, y);
      case StructureKind::custom: break;
    }
    return ops_->residuum(x, y);
  }

 private:
  struct CustomOps {
    BinaryOp tnorm;
    BinaryOp residuum;
  };

  Structure(StructureKind kind, std::string name, double eps)
      : kind_(kind), name_(std::move(name)), eps_(eps) {
    if (!(eps >= 0.0)) throw InvalidDegree("comparison tolerance must be non-negative");
  }

  StructureKind kind_;
  std::string name_;
  double eps_;
  std::shared_ptr<const CustomOps> ops_;
};

static_assert(ResiduatedLattice<Godel>);
static_assert(ResiduatedLattice<Lukasiewicz>);
static_assert(ResiduatedLattice<Product>);
static_assert(ResiduatedLattice<Structure>);

}  // namespace fuzzbound
