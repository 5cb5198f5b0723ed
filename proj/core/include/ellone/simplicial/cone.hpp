#pragma once

#include <memory>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"

namespace ellone::simplicial {

/// A complex that is a cone with the given apex: every simplex missing the apex
/// spans a simplex together with it.
class ConeDatum {
 public:
  /// Throws PreconditionError when K is not a cone over `apex`.
  static ConeDatum make(std::shared_ptr<const OrientedComplex> k, int apex);
  static ConeDatum make(const OrientedComplex& k, int apex) {
    return make(std::make_shared<const OrientedComplex>(k), apex);
  }

  int apex() const { return apex_; }
  const OrientedComplex& complex() const { return *complex_; }

  /// T_n: C_n -> C_{n+1}. T(s) = [apex, s] with its sort sign, 0 when the apex
  /// is a vertex of s; on degree -1, T(1) = [apex]. In augmented mode
  /// dT + Td = Id in every degree >= -1.
  Chain operator()(const Chain& c) const;
  ChainOperator as_operator(int n) const;

 private:
  std::shared_ptr<const OrientedComplex> complex_;
  int apex_ = 0;
};

inline Chain cone_homotopy(const ConeDatum& cone, const Chain& c) { return cone(c); }

}  // namespace ellone::simplicial
