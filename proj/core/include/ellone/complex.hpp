#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ellone {

/// Strictly ascending tuple of vertex ids.
using Simplex = std::vector<int>;

/// Position of a simplex inside a complex.
struct SimplexRef {
  int dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// Finite ordered simplicial complex with simplices indexed per dimension.
///
/// Every face of a listed simplex is present. Orientation signs are induced by
/// the vertex order. 0-simplices are always indexed by vertex id. In higher
/// dimensions, simplices handed to `from_simplices` keep their listing order;
/// faces that were only reached by face completion follow in lexicographic
/// order.
class OrientedComplex {
 public:
  OrientedComplex() = default;

  /// Builds the complex generated by `listed` on vertices 0..vertex_count-1.
  /// Each tuple is sorted; repeated vertices, out-of-range ids and duplicate
  /// listings throw PreconditionError.
  static OrientedComplex from_simplices(int vertex_count, std::span<const Simplex> listed);

  int vertex_count() const { return vertex_count_; }
  /// Top dimension; -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int dim) const;
  std::size_t total_count() const;

  const Simplex& simplex(int dim, std::size_t index) const { return simplices_.at(static_cast<std::size_t>(dim)).at(index); }
  const Simplex& simplex(SimplexRef ref) const { return simplex(ref.dim, ref.index); }
  const std::vector<Simplex>& simplices(int dim) const { return simplices_.at(static_cast<std::size_t>(dim)); }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// Like index_of but throws PreconditionError when absent.
  std::size_t require_index(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Index in the concatenation of all dimensions (dimension 0 first).
  std::size_t global_index(SimplexRef ref) const;
  SimplexRef from_global_index(std::size_t global) const;

  /// Indices of the codimension-one faces of simplex (dim, index), face i
  /// omitting vertex i.
  std::vector<std::size_t> face_indices(int dim, std::size_t index) const;

  /// Maximal simplices, in dimension-then-index order.
  std::vector<SimplexRef> maximal_simplices() const;

  friend bool operator==(const OrientedComplex& a, const OrientedComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Removes vertex i from s.
Simplex face(const Simplex& s, std::size_t i);

/// Sorts `tuple` ascending and returns the sign of the sorting permutation,
/// or 0 when a vertex repeats.
int sort_with_sign(std::vector<int>& tuple);

}  // namespace ellone
