#pragma once

#include <memory>
#include <vector>

#include <json.hpp>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"

namespace ellone::simplicial {

/// Barycentric subdivision sd K of an ordered complex K as a new ordered complex.
///
/// Vertices of sd K are the nonempty faces of K: the barycenter of face
/// (dim, index) gets id offset(dim) + index, where offset(dim) counts the faces
/// of lower dimension. Original vertices keep their ids and barycenters of
/// higher faces get larger ids, so every flag s0 < s1 < ... < sk is an
/// ascending tuple.
class SubdividedComplex {
 public:
  static SubdividedComplex build(std::shared_ptr<const OrientedComplex> original);
  static SubdividedComplex build(const OrientedComplex& original) {
    return build(std::make_shared<const OrientedComplex>(original));
  }

  const OrientedComplex& original() const { return *original_; }
  const OrientedComplex& subdivided() const { return *subdivided_; }
  std::shared_ptr<const OrientedComplex> subdivided_ptr() const { return subdivided_; }

  int barycenter(SimplexRef face) const;
  /// Face of K whose barycenter is vertex v of sd K.
  SimplexRef face_of_vertex(int v) const { return vertex_faces_.at(static_cast<std::size_t>(v)); }

  /// sd_n: C_n(K) -> C_n(sd K); commutes with the boundary.
  Chain sd(const Chain& c) const;
  const ChainOperator& sd_operator(int n) const { return sd_ops_.at(static_cast<std::size_t>(n)); }

  /// Simplicial last-vertex map sd K -> K (barycenter of a face goes to its
  /// largest vertex); a chain map with flatten o sd = Id.
  Chain flatten(const Chain& c) const;

  /// Smallest face of K containing the subdivided simplex (the top of its flag).
  SimplexRef carrier(SimplexRef subdivided_simplex) const;

  /// Vertex-id provenance: for every vertex of sd K, the face of K it subdivides.
  nlohmann::ordered_json report() const;

 private:
  std::shared_ptr<const OrientedComplex> original_;
  std::shared_ptr<const OrientedComplex> subdivided_;
  std::vector<std::size_t> offsets_;
  std::vector<SimplexRef> vertex_faces_;
  std::vector<ChainOperator> sd_ops_;
};

/// Simplex counts per dimension of sd^r K for r = 0..rounds.
struct SubdivisionRound {
  int round = 0;
  std::vector<std::size_t> counts;
  double seconds = 0.0;
};

/// Iterates the subdivision; throws ResourceError when rounds > cap.
std::vector<SubdivisionRound> iterate_subdivision(const OrientedComplex& k, int rounds, int cap = 6);

/// Predicted number of top simplices after r rounds: sum over top simplices of
/// ((n+1)!)^r, taken per dimension over maximal simplices.
std::vector<std::size_t> predicted_top_counts(const OrientedComplex& k, int rounds);

}  // namespace ellone::simplicial
