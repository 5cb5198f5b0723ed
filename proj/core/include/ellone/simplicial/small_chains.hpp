#pragma once

#include <functional>
#include <vector>

#include "ellone/simplicial/affine_chains.hpp"
#include "ellone/simplicial/cover.hpp"

namespace ellone::simplicial {

inline constexpr int kDefaultXiCap = 20;

/// An affine simplex is small when all of its points lie in one set of the cover.
bool is_small(const AffineChainModel& model, const OpenCover& cover, const AffineSimplex& s);
/// Every simplex of the chain is small (possibly in different sets).
bool is_small(const AffineChainModel& model, const OpenCover& cover, const AffineChain& c);

/// Least j with sd^j(s) small. Throws ResourceError past `cap`.
int xi(const AffineChainModel& model, const OpenCover& cover, const AffineSimplex& s, int cap = kDefaultXiCap);

/// Subdivide-until-small chain map. With the prism operator D normalized by
/// dD + Dd = sd - Id,
///   tau(s) = sd^{xi(s)}(s) - sum_i (-1)^i sum_{j = xi(s^i)}^{xi(s) - 1} D(sd^j(s^i)),
/// which makes tau - Id = d Omega + Omega d exactly.
AffineChain tau(const AffineChainModel& model, const OpenCover& cover, const AffineChain& c, int cap = kDefaultXiCap);

/// Omega(s) = sum_{j < xi(s)} D(sd^j(s)).
AffineChain omega(const AffineChainModel& model, const OpenCover& cover, const AffineChain& c,
                  int cap = kDefaultXiCap);

/// Cochain on affine simplices of a fixed degree, given as an evaluation rule.
class AffineCochain {
 public:
  using Rule = std::function<Rational(const AffineSimplex&)>;

  AffineCochain(int degree, Rule rule) : degree_(degree), rule_(std::move(rule)) {}

  int degree() const { return degree_; }
  Rational operator()(const AffineSimplex& s) const { return rule_(s); }
  /// Kronecker pairing with a chain of the same degree.
  Rational operator()(const AffineChain& c) const;

 private:
  int degree_;
  Rule rule_;
};

/// (delta f)(s) = f(ds).
AffineCochain coboundary(const AffineCochain& f);

/// Dual of Omega one degree down: (Omega^n f)(t) = f(Omega(t)).
AffineCochain omega_dual(std::shared_ptr<const AffineChainModel> model, std::shared_ptr<const OpenCover> cover,
                         const AffineCochain& f, int cap = kDefaultXiCap);

/// Affine simplices of the given degree used to test cochain identities: the
/// simplices of K, the pieces of sd^j of them for j <= depth, and prism terms
/// of the simplices one degree down.
std::vector<AffineSimplex> probe_simplices(const AffineChainModel& model, int degree, int depth);

/// Omega^n of a cochain that vanishes on small simplices. Vanishing is checked
/// on `probes` (PreconditionError otherwise) and re-checked for the output on
/// the small probes one degree down.
AffineCochain omega_dual_locally_zero(std::shared_ptr<const AffineChainModel> model,
                                      std::shared_ptr<const OpenCover> cover, const AffineCochain& f,
                                      const std::vector<AffineSimplex>& probes, int cap = kDefaultXiCap);

}  // namespace ellone::simplicial
