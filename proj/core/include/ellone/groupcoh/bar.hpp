#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ellone/groupcoh/finite_group.hpp"
#include "ellone/rational.hpp"

namespace ellone::groupcoh {

/// Function G^{n+1} -> Q stored densely; tuples are read as base-|G| digits with
/// g0 most significant. Degree -1 holds a single value (the augmentation term).
/// For finite G every such function is bounded.
class BarCochain {
 public:
  BarCochain() = default;
  BarCochain(int order, int degree);

  int order() const { return order_; }
  int degree() const { return degree_; }
  std::size_t size() const { return values_.size(); }

  Rational& operator[](std::size_t i) { return values_[i]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& at(std::span<const int> tuple) const { return values_.at(index(tuple)); }
  Rational& at(std::span<const int> tuple) { return values_.at(index(tuple)); }

  std::size_t index(std::span<const int> tuple) const;
  std::vector<int> tuple(std::size_t index) const;

  const std::vector<Rational>& values() const { return values_; }

  BarCochain& operator+=(const BarCochain& other);
  BarCochain& operator-=(const BarCochain& other);
  BarCochain& operator*=(const Rational& s);
  friend BarCochain operator+(BarCochain a, const BarCochain& b) { return a += b; }
  friend BarCochain operator-(BarCochain a, const BarCochain& b) { return a -= b; }
  friend BarCochain operator*(const Rational& s, BarCochain a) { return a *= s; }
  friend bool operator==(const BarCochain&, const BarCochain&) = default;

 private:
  int order_ = 1;
  int degree_ = -1;
  std::vector<Rational> values_;
};

/// (delta f)(g0..g_{n+1}) = sum_i (-1)^i f(g0..^gi..g_{n+1}); on degree -1 the
/// constant cochain.
BarCochain bar_differential(const BarCochain& f);

/// (g.f)(g0..gn) = f(g^-1 g0, ..., g^-1 gn).
BarCochain act(const FiniteGroup& group, int g, const BarCochain& f);
bool is_invariant(const FiniteGroup& group, const BarCochain& f);

Rational sup_norm(const BarCochain& f);

/// k(f)(g0..g_{n-1}) = sum_x mu(x) f(x, g0, ..., g_{n-1}) for a probability
/// weight mu on G. With mu = indicator of the identity this inserts e in front.
/// delta k + k delta = Id in every degree >= 0 and ||k f|| <= ||f||.
class ContractingHomotopy {
 public:
  /// Standard choice: mu concentrated at the identity.
  explicit ContractingHomotopy(const FiniteGroup& group);
  /// Weights must be nonnegative and sum to one (PreconditionError).
  ContractingHomotopy(const FiniteGroup& group, std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  BarCochain operator()(const BarCochain& f) const;

 private:
  std::vector<Rational> weights_;
};

inline BarCochain contracting_homotopy_bar(const FiniteGroup& group, const BarCochain& f) {
  return ContractingHomotopy(group)(f);
}

}  // namespace ellone::groupcoh
