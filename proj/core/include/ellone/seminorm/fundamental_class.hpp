#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"
#include "ellone/error.hpp"

namespace ellone::seminorm {

class NonOrientableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// +-1 top cycle of a closed oriented pseudomanifold.
struct FundamentalClass {
  Chain cycle;
  /// Sign chosen for each top simplex.
  std::vector<int> orientation;
  /// Spanning forest of the adjacency graph along which signs were propagated:
  /// (parent top simplex, child top simplex, shared face).
  std::vector<std::array<std::size_t, 3>> witness;
};

/// Orientation propagation across shared codimension-one faces. Throws
/// PreconditionError when K is not pure, a face has more than two cofaces or
/// some face has only one (boundary); NonOrientableError when propagation
/// meets a contradiction. Orientability is decided before closedness, so a
/// Moebius strip reports NonOrientableError.
FundamentalClass fundamental_class(const OrientedComplex& k);

}  // namespace ellone::seminorm
