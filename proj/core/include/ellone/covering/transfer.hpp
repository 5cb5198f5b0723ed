#pragma once

#include <vector>

#include <json.hpp>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"
#include "ellone/groupcoh/finite_group.hpp"
#include "ellone/linalg.hpp"
#include "ellone/seminorm/lp.hpp"

namespace ellone::covering {

/// Finite group G of simplicial automorphisms of X~ with a subgroup Gamma
/// acting freely on vertices and one representative per right coset Gamma g.
/// Automorphisms may reverse the vertex order of a simplex; the action on
/// chains then carries the sign of the reordering.
class IsometryGroupDatum {
 public:
  /// `generators` are vertex permutations generating G; `subgroup_generators`
  /// generate Gamma (each must lie in G).
  static IsometryGroupDatum make(OrientedComplex total, const std::vector<std::vector<int>>& generators,
                                 const std::vector<std::vector<int>>& subgroup_generators, int order_cap = 64);
  /// `{"total", "generators", "subgroup_generators"}`.
  static IsometryGroupDatum from_json(const nlohmann::ordered_json& j);

  const OrientedComplex& total() const { return total_; }
  const groupcoh::FiniteGroup& group() const { return group_; }
  const std::vector<int>& subgroup() const { return subgroup_; }
  /// Coset representatives F, weight 1/|F| each.
  const std::vector<int>& representatives() const { return representatives_; }

  /// g.[s] = sign [g s]: (index of the image, sign).
  std::pair<std::size_t, int> act_simplex(int g, int dim, std::size_t index) const;
  /// (g.f)(s) = f(g^-1 . s).
  Cochain act(int g, const Cochain& f) const;
  bool is_invariant(const Cochain& f, const std::vector<int>& elements) const;
  bool is_g_invariant(const Cochain& f) const;
  bool is_gamma_invariant(const Cochain& f) const;

  /// Basis of the cochains of degree n invariant under `elements`: signed
  /// orbit sums, omitting orbits on which some element reverses a simplex.
  std::vector<Cochain> invariant_basis(int n, const std::vector<int>& elements) const;

  nlohmann::ordered_json to_json() const;

 private:
  OrientedComplex total_;
  groupcoh::FiniteGroup group_;
  std::vector<int> subgroup_;
  std::vector<int> representatives_;
  std::vector<std::vector<int>> generators_;
  std::vector<std::vector<int>> subgroup_generators_;
};

/// tr(f)(s) = (1/|F|) sum_{g in F} f(g . s). Requires f Gamma-invariant.
Cochain transfer(const IsometryGroupDatum& d, const Cochain& f);

/// Restriction from G-invariant to Gamma-invariant cochains (the inclusion).
/// Requires f G-invariant.
Cochain restriction(const IsometryGroupDatum& d, const Cochain& f);

struct IsometryReport {
  Rational g_seminorm;
  Rational gamma_seminorm;
  bool equal = false;
  seminorm::LPCertificate g_certificate;
  seminorm::LPCertificate gamma_certificate;
};

/// Seminorm of the class of a G-invariant cocycle in the G-invariant complex
/// and of its restriction in the Gamma-invariant complex.
IsometryReport res_isometry_check(const IsometryGroupDatum& d, const Cochain& f,
                                  seminorm::PivotRule rule = seminorm::PivotRule::kBland);

}  // namespace ellone::covering
