#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"
#include "ellone/simplicial/cone.hpp"

namespace ellone::covering {

/// s-bar(g0, ..., gn) for trivial Gamma on a cone with basepoint the apex:
/// s-bar(e) = [x0], s-bar(e, ..., e) = T(s-bar(e, ..., e)).
Chain cone_sbar(const simplicial::ConeDatum& cone, int n);

/// theta^n(f)(s) = f(s-bar(e, ..., e)) for trivial Gamma on a cone.
Cochain theta(const simplicial::ConeDatum& cone, const Cochain& f);

/// The integers acting by translation by k on the triangulated line (vertices
/// Z, edges [j, j+1]), with quotient the k-edge circle `ellone::standard::circle(k)`.
/// The line is never materialized: chains are finite edge sums.
class LineOverCircle {
 public:
  enum class Weight { kIndicator, kHat };

  /// kIndicator: h = indicator of {0, ..., k-1}. kHat: h(x) = max(0, 1 - |x|/k).
  LineOverCircle(int k, Weight weight);

  int k() const { return k_; }
  const OrientedComplex& base() const { return base_; }
  Weight weight() const { return weight_; }

  Rational h(long x) const;
  /// Nonzero terms (g, h(x - g k)) of the partition at vertex x.
  std::vector<std::pair<long, Rational>> partition(long x) const;

  /// Line edge [j, j+1] -> (base edge index, sign).
  std::pair<std::size_t, int> project_edge(long j) const;

  /// 1-chain on the line: left endpoint j of [j, j+1] -> coefficient.
  using LineChain = std::map<long, Rational>;
  /// The cone operator at basepoint 0 on a vertex: the edge path from 0 to v.
  LineChain cone_vertex(long v) const;
  /// s-bar(g0) = the vertex g0 k; s-bar(g0, g1) = path from g0 k to g1 k.
  LineChain sbar(long g0, long g1) const;

  /// Pullback of a base cochain evaluated on a line chain.
  Rational evaluate_lift(const Cochain& f, const LineChain& c) const;

  /// theta^n for n = 0, 1 (and 0 above), represented on the base.
  Cochain theta(const Cochain& f) const;

 private:
  int k_;
  Weight weight_;
  OrientedComplex base_;
};

}  // namespace ellone::covering
