#pragma once

#include <functional>

#include "ellone/covering/covering.hpp"
#include "ellone/groupcoh/bar.hpp"
#include "ellone/linalg.hpp"

namespace ellone::covering {

/// Data for extending a Gamma-map alpha: A -> C^n(X~) along an injective
/// Gamma-map iota: A -> B, using a linear left inverse sigma of iota. A and B
/// are finite dimensional with Gamma acting by `act_a`, `act_b`.
struct ExtensionProblem {
  int degree = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::function<DenseVector(int g, const DenseVector&)> act_a;
  std::function<DenseVector(int g, const DenseVector&)> act_b;
  std::function<DenseVector(const DenseVector&)> iota;
  std::function<DenseVector(const DenseVector&)> sigma;
  std::function<Cochain(const DenseVector&)> alpha;
};

/// Throws PreconditionError unless sigma(iota(e_i)) = e_i on the basis of A.
void check_left_inverse(const ExtensionProblem& problem);

/// beta(b)(s) = sum_g h(g^-1 s(e0)) alpha(g sigma(g^-1 b))(s).
Cochain equivariant_extend(const CoveringDatum& c, const BruhatFunction& h, const ExtensionProblem& problem,
                           const DenseVector& b);

/// beta^n(f)(s) = sum h(g0^-1 s(e0)) ... h(gn^-1 s(en)) f(g0, ..., gn), for f on
/// the deck group.
Cochain bar_to_cochains(const CoveringDatum& c, const BruhatFunction& h, const groupcoh::BarCochain& f);

}  // namespace ellone::covering
