#pragma once

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"
#include "ellone/covering/covering.hpp"

namespace ellone::covering {

/// F with delta F = f, built along a breadth-first spanning tree from vertex 0
/// with F(0) = 0: F(q) is f evaluated on the tree path to q. Throws
/// PreconditionError when K is disconnected or f pairs nontrivially with a
/// cycle of a homology basis.
Cochain integrate_degree1(const OrientedComplex& k, const Cochain& f);

struct AveragedPrimitive {
  /// F_c(x) = sum_g h(g^-1 x) F(g x0).
  Cochain averaged;
  /// k = F - F_c, deck invariant.
  Cochain invariant;
  /// k as a cochain on the base.
  Cochain descended;
};

/// For an invariant 1-coboundary f~ = delta F on X~, checks
/// F(g y) - F(g x) = F(y) - F(x) for all deck g and vertices x, y, and builds
/// F_c with x0 the first fundamental-domain vertex. Then k = F - F_c is
/// invariant and f~ - delta(p^* k) = delta F_c.
AveragedPrimitive average_primitive(const CoveringDatum& c, const BruhatFunction& h, const Cochain& f,
                                    const Cochain& primitive);

}  // namespace ellone::covering
