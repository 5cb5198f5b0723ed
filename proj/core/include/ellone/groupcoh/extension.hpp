#pragma once

#include <functional>
#include <vector>

#include "ellone/groupcoh/bar.hpp"
#include "ellone/linalg.hpp"

namespace ellone::groupcoh {

/// A strong resolution E^{-1} = Q -> E^0 -> E^1 -> ... of normed G-modules,
/// each E^n finite dimensional, with a contracting homotopy k^n: E^n -> E^{n-1}
/// of norm at most one. Elements are coordinate vectors.
struct StrongResolution {
  const FiniteGroup* group = nullptr;
  std::function<std::size_t(int n)> dimension;
  /// g . v in E^n; E^{-1} carries the trivial action.
  std::function<DenseVector(int n, int g, const DenseVector& v)> act;
  /// E^n -> E^{n+1}, n >= -1.
  std::function<DenseVector(int n, const DenseVector& v)> differential;
  /// k^n: E^n -> E^{n-1}, n >= 0. Empty when not declared.
  std::function<DenseVector(int n, const DenseVector& v)> homotopy;
  std::function<Rational(int n, const DenseVector& v)> norm;
};

/// The bar resolution itself, with contracting homotopy k weighted by `mu`
/// (standard identity insertion when empty).
StrongResolution bar_resolution(const FiniteGroup& group, std::vector<Rational> mu = {});

DenseVector to_vector(const BarCochain& f);
BarCochain from_vector(int order, int degree, const DenseVector& v);

/// Chain map E^* -> bar resolution extending the identity of Q:
///   alpha^n(v)(g0, ..., gn) = alpha^{n-1}(g0 . k^n(g0^-1 . v))(g1, ..., gn),
/// alpha^{-1} = Id. Throws PreconditionError when E declares no homotopy.
BarCochain extend_to_bar(const StrongResolution& e, int n, const DenseVector& v);

}  // namespace ellone::groupcoh
