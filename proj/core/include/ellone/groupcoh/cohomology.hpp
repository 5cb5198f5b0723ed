#pragma once

#include <string>
#include <vector>

#include "ellone/groupcoh/bar.hpp"
#include "ellone/linalg.hpp"
#include "ellone/seminorm/lp.hpp"

namespace ellone::groupcoh {

inline constexpr int kDefaultDegreeCap = 3;

/// Orbit basis: unbounded complex of invariant cochains in orbit coordinates.
/// Bounded: invariant subspace of the full sup-normed complex, cut out as the
/// null space of f -> g.f - f.
enum class Pipeline { kOrbit, kBounded };

std::string to_string(Pipeline p);

struct GroupCohomology {
  int degree = 0;
  Pipeline pipeline = Pipeline::kOrbit;
  std::size_t rank = 0;
  /// Invariant cocycles whose classes form a basis of H^n.
  std::vector<BarCochain> basis;
  /// Canonical seminorm of each basis class.
  std::vector<Rational> seminorms;
};

/// Rank of H^n of the invariant bar complex and the canonical seminorm of each
/// basis class. ResourceError when n exceeds `degree_cap`.
GroupCohomology group_cohomology(const FiniteGroup& group, int n, Pipeline pipeline = Pipeline::kOrbit,
                                 int degree_cap = kDefaultDegreeCap,
                                 seminorm::PivotRule rule = seminorm::PivotRule::kBland);

/// inf ||f + delta eta||_inf over invariant eta, for an invariant cocycle f.
Rational canonical_seminorm(const FiniteGroup& group, const BarCochain& f, Pipeline pipeline,
                            seminorm::PivotRule rule = seminorm::PivotRule::kBland);

/// The invariant cochain summing the indicator over the orbit of the tuple
/// (e, h1, ..., hn).
BarCochain orbit_cochain(const FiniteGroup& group, int degree, std::size_t orbit);

/// Matrix of delta: invariant n-cochains -> invariant (n+1)-cochains, in orbit
/// coordinates (orbit of (e, h1..hn) has index of (h1..hn) in base |G|).
SparseMatrix orbit_differential(const FiniteGroup& group, int n);

/// Basis of the invariant n-cochains via the null space of the action difference.
std::vector<DenseVector> invariant_basis(const FiniteGroup& group, int n);

}  // namespace ellone::groupcoh
