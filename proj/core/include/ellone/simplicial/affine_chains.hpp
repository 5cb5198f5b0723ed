#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"

namespace ellone::simplicial {

using PointId = std::uint32_t;

/// Barycentric coordinates of a point of |K|: ascending (vertex, weight) pairs,
/// all weights positive, summing to one. The vertices form the support simplex.
using Coordinates = std::vector<std::pair<int, Rational>>;

/// Affine simplex of |K|: ordered tuple of points whose supports lie in a
/// common simplex of K. Repeated points (degenerate simplices) are allowed; the
/// empty tuple spans degree -1.
using AffineSimplex = std::vector<PointId>;
using AffineChain = Graded<AffineSimplex, ChainTag>;

/// Chain complex of affine simplices of |K| with rational vertices.
///
/// This is the finite model in which barycentric subdivision is an
/// endomorphism sd: C_n -> C_n, so sd - Id, the prism operator D and the
/// cover-relative operators tau and Omega live in one complex. The formulas
/// are the classical cone recursions
///   sd(s) = b_s . sd(ds),            sd([w]) = [w]
///   D(s)  = -b_s . (s + D(ds)),       D on degree -1 is 0
/// where b . [w0..wk] = [b, w0..wk] and b_s is the barycenter of the tuple
/// (points counted with multiplicity). They satisfy d sd = sd d and
/// dD + Dd = sd - Id exactly.
///
/// Points are interned; the table is guarded by a mutex so a model can be
/// shared across threads.
class AffineChainModel {
 public:
  explicit AffineChainModel(std::shared_ptr<const OrientedComplex> k);
  explicit AffineChainModel(const OrientedComplex& k)
      : AffineChainModel(std::make_shared<const OrientedComplex>(k)) {}

  const OrientedComplex& complex() const { return *complex_; }

  PointId vertex(int v) const;
  PointId intern(Coordinates coords) const;
  Coordinates coordinates(PointId p) const;
  /// The simplex of K whose interior contains the point.
  SimplexRef support(PointId p) const;
  std::size_t point_count() const;

  PointId barycenter(const AffineSimplex& s) const;
  /// Smallest simplex of K containing the image (union of supports), or
  /// nullopt when the points do not lie in a common simplex.
  std::optional<SimplexRef> carrier(const AffineSimplex& s) const;

  /// The simplex [v0..vn] of K as the affine simplex on its vertices.
  AffineSimplex embed(const Simplex& s) const;
  AffineChain embed(const Chain& c) const;

  AffineChain boundary(const AffineChain& c) const;
  AffineChain cone(PointId apex, const AffineChain& c) const;
  AffineChain sd(const AffineChain& c) const;
  AffineChain sd_power(const AffineChain& c, int times) const;
  /// Prism operator D: C_n -> C_{n+1}.
  AffineChain prism(const AffineChain& c) const;

 private:
  struct Point {
    Coordinates coords;
    SimplexRef support;
  };

  AffineChain sd_simplex(const AffineSimplex& s) const;
  AffineChain prism_simplex(const AffineSimplex& s) const;

  std::shared_ptr<const OrientedComplex> complex_;
  mutable std::mutex mutex_;
  mutable std::map<Coordinates, PointId> ids_;
  mutable std::deque<Point> points_;
};

/// Boundary of a single affine simplex (augmented: a point maps to the empty tuple).
AffineChain affine_boundary(const AffineSimplex& s);

}  // namespace ellone::simplicial
