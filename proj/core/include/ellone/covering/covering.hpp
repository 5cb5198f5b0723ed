#pragma once

#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"
#include "ellone/groupcoh/finite_group.hpp"

namespace ellone::covering {

/// Regular combinatorial covering p: X~ -> X with a finite deck group acting
/// on the vertices of X~.
///
/// Checked on construction: p is simplicial and injective on every simplex,
/// p o g = p, the action is free on vertices, fibres are exactly the orbits,
/// every orbit meets the fundamental domain once, and every deck element keeps
/// the vertex order of each simplex (so g.[v0..vn] = [g v0 .. g vn] without a
/// sign and "first vertex" is equivariant).
class CoveringDatum {
 public:
  static CoveringDatum make(OrientedComplex base, OrientedComplex total, std::vector<int> projection,
                            const std::vector<std::vector<int>>& deck_generators, std::vector<int> fundamental_domain,
                            int order_cap = 64);
  /// `{"base", "total", "projection", "deck_generators", "fundamental_domain"}`.
  static CoveringDatum from_json(const nlohmann::ordered_json& j);

  const OrientedComplex& base() const { return *base_; }
  const OrientedComplex& total() const { return *total_; }
  const groupcoh::FiniteGroup& deck() const { return deck_; }
  const std::vector<int>& projection() const { return projection_; }
  const std::vector<int>& fundamental_domain() const { return domain_; }

  int act_vertex(int g, int v) const { return deck_.permutations()[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)]; }
  /// Index of g.s among the simplices of X~ of the same dimension.
  std::size_t act_simplex(int g, int dim, std::size_t index) const;
  /// (g.f)(s) = f(g^-1 s).
  Cochain act(int g, const Cochain& f) const;
  Chain act(int g, const Chain& c) const;
  bool is_invariant(const Cochain& f) const;

  /// The deck element g with v = g . (domain vertex of the orbit of v).
  int domain_element(int v) const { return domain_element_[static_cast<std::size_t>(v)]; }

  /// Image of a simplex of X~ in X with the sign of the reordering.
  std::pair<std::size_t, int> project_simplex(int dim, std::size_t index) const;
  /// A lift of a simplex of X whose first vertex lies in the fundamental domain.
  std::size_t lift_simplex(int dim, std::size_t base_index) const;

  nlohmann::ordered_json to_json() const;

 private:
  std::shared_ptr<const OrientedComplex> base_;
  std::shared_ptr<const OrientedComplex> total_;
  std::vector<int> projection_;
  std::vector<std::vector<int>> generators_;
  groupcoh::FiniteGroup deck_;
  std::vector<int> domain_;
  std::vector<int> domain_element_;
};

/// p^*: C^n(X) -> C^n(X~)^Gamma, (p^* f)(s) = f(p s).
Cochain lift_cochain(const CoveringDatum& c, const Cochain& f);
/// Inverse of p^* on invariant cochains: value on the lift of each base simplex.
Cochain descend_cochain(const CoveringDatum& c, const Cochain& f);

/// Function h on the vertices of X~ with sum_g h(g.x) = 1 on every orbit.
struct BruhatFunction {
  std::vector<Rational> values;
  Rational operator()(int v) const { return values.at(static_cast<std::size_t>(v)); }
};

/// Indicator of the fundamental vertex domain.
BruhatFunction bruhat(const CoveringDatum& c);

/// True when sum_g h(g.x) = 1 for every vertex x.
bool satisfies_partition(const CoveringDatum& c, const BruhatFunction& h);

}  // namespace ellone::covering
