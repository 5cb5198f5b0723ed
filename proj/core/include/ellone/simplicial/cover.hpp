#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellone/complex.hpp"

namespace ellone::simplicial {

/// Finite cover of |K| by open sets. Each set is a union of open stars: the
/// simplices of K having one of its generators as a face. A point of |K| lies
/// in the set exactly when the simplex carrying it in its interior does.
class OpenCover {
 public:
  struct Set {
    std::string name;
    std::vector<char> member;  // indexed by global simplex index
  };

  /// `generators[i]` lists simplices of K (ascending tuples) generating set i.
  static OpenCover from_generators(const OrientedComplex& k, std::vector<std::string> names,
                                   const std::vector<std::vector<Simplex>>& generators);

  /// `{"sets": {"U0": [...], ...}}` where each entry is a global simplex index
  /// or a vertex tuple.
  static OpenCover from_json(const OrientedComplex& k, const nlohmann::ordered_json& j);

  /// The trivial cover {|K|}.
  static OpenCover whole(const OrientedComplex& k);
  /// Open stars of the vertices.
  static OpenCover vertex_stars(const OrientedComplex& k);

  std::size_t size() const { return sets_.size(); }
  const Set& set(std::size_t i) const { return sets_.at(i); }
  bool contains(std::size_t set_index, SimplexRef s) const;

  /// True when every vertex (hence every point) lies in some set.
  bool covers() const;
  /// Throws PreconditionError unless covers().
  void require_covers() const;

  /// Sets containing every vertex of s, i.e. the closed simplex.
  bool is_small(const Simplex& s) const;

  const OrientedComplex& complex() const { return *complex_; }

 private:
  std::shared_ptr<const OrientedComplex> complex_;
  std::vector<Set> sets_;
};

}  // namespace ellone::simplicial
