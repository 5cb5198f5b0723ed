#include <gtest/gtest.h>

#include "corpus.hpp"
#include "ellone/covering/averaging.hpp"
#include "ellone/covering/covering.hpp"
#include "ellone/covering/degree_one.hpp"
#include "ellone/covering/standard_coverings.hpp"
#include "ellone/covering/theta.hpp"
#include "ellone/covering/transfer.hpp"
#include "ellone/error.hpp"
#include "ellone/homology.hpp"
#include "ellone/simplicial/cone.hpp"
#include "ellone/standard_complexes.hpp"

namespace ellone::covering {
namespace {

namespace sc = ellone::standard;
namespace cs = ellone::covering::standard;
using groupcoh::BarCochain;

std::vector<CoveringDatum> coverings() {
  return {cs::trivial_covering(sc::torus7()), cs::cyclic_circle_cover(4, 2), cs::cyclic_circle_cover(4, 3),
          cs::cyclic_circle_cover(6, 2), cs::torus_cover()};
}

TEST(Covering, CorpusDataAreValid) {
  for (const auto& c : coverings()) {
    EXPECT_EQ(c.total().vertex_count(), c.base().vertex_count() * c.deck().order());
    EXPECT_TRUE(satisfies_partition(c, bruhat(c)));
    for (int n = 0; n <= c.base().dimension(); ++n) {
      for (std::size_t i = 0; i < c.base().count(n); ++i) {
        const std::size_t lift = c.lift_simplex(n, i);
        EXPECT_EQ(c.project_simplex(n, lift), (std::pair<std::size_t, int>{i, 1}));
      }
    }
  }
  EXPECT_EQ(homology_ranks(cs::coloured_torus(3, 3)), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(homology_ranks(cs::torus_cover().total()), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Covering, RejectsInconsistentData) {
  const auto base = cs::parity_circle(4);
  const auto total = cs::parity_circle(8);
  std::vector<int> projection(8), domain;
  for (int p = 0; p < 8; ++p) projection[cs::parity_label(8, p)] = cs::parity_label(4, p % 4);
  for (int p = 0; p < 4; ++p) domain.push_back(cs::parity_label(8, p));
  // rotation by one position swaps parities, so it reverses edges
  std::vector<int> odd(8), even(8);
  for (int p = 0; p < 8; ++p) {
    odd[cs::parity_label(8, p)] = cs::parity_label(8, (p + 1) % 8);
    even[cs::parity_label(8, p)] = cs::parity_label(8, (p + 4) % 8);
  }
  EXPECT_NO_THROW(CoveringDatum::make(base, total, projection, {even}, domain));
  EXPECT_THROW(CoveringDatum::make(base, total, projection, {odd}, domain), PreconditionError);
  auto bad_domain = domain;
  bad_domain.back() = cs::parity_label(8, 4);
  EXPECT_THROW(CoveringDatum::make(base, total, projection, {even}, bad_domain), PreconditionError);
}

TEST(Covering, LiftAndDescendAreInverse) {
  corpus::Rng rng(1);
  for (const auto& c : coverings()) {
    for (int n = 0; n <= c.base().dimension(); ++n) {
      const Cochain f = corpus::random_cochain(c.base(), n, rng);
      const Cochain lifted = lift_cochain(c, f);
      EXPECT_TRUE(c.is_invariant(lifted));
      EXPECT_EQ(descend_cochain(c, lifted), f);
      if (n >= 1) continue;
      EXPECT_EQ(coboundary(c.total(), lifted), lift_cochain(c, coboundary(c.base(), f)));
    }
  }
}

BarCochain random_bar(int order, int degree, corpus::Rng& rng) {
  BarCochain f(order, degree);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = corpus::random_rational(rng);
  return f;
}

TEST(Averaging, BarToCochainsIsAnEquivariantNormNonincreasingChainMap) {
  corpus::Rng rng(2);
  for (const auto& c : coverings()) {
    const auto h = bruhat(c);
    const auto& g = c.deck();
    for (int n = 0; n <= std::min(c.total().dimension(), 2) - 1; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const BarCochain f = random_bar(g.order(), n, rng);
        const Cochain b = bar_to_cochains(c, h, f);
        EXPECT_LE(linf_norm(b), groupcoh::sup_norm(f));
        EXPECT_EQ(coboundary(c.total(), b), bar_to_cochains(c, h, groupcoh::bar_differential(f)));
        for (int x = 0; x < g.order(); ++x) EXPECT_EQ(bar_to_cochains(c, h, groupcoh::act(g, x, f)), c.act(x, b));
      }
    }
  }
}

// A = Q with the trivial action, B = functions on the deck group with the
// regular action, iota = constants, sigma = value at the identity, and alpha
// the pull-back of a fixed base cochain.
ExtensionProblem regular_problem(const CoveringDatum& c, const Cochain& base_cochain) {
  const auto& g = c.deck();
  ExtensionProblem p;
  p.degree = base_cochain.degree();
  p.dim_a = 1;
  p.dim_b = static_cast<std::size_t>(g.order());
  p.act_a = [](int, const DenseVector& v) { return v; };
  p.act_b = [&g](int x, const DenseVector& b) {
    DenseVector out(b.size());
    for (int y = 0; y < g.order(); ++y) out[static_cast<std::size_t>(y)] = b[static_cast<std::size_t>(g.multiply(g.inverse(x), y))];
    return out;
  };
  p.iota = [&g](const DenseVector& a) { return DenseVector(static_cast<std::size_t>(g.order()), a[0]); };
  p.sigma = [&g](const DenseVector& b) { return DenseVector{b[static_cast<std::size_t>(g.identity())]}; };
  const Cochain lifted = lift_cochain(c, base_cochain);
  p.alpha = [lifted](const DenseVector& a) { return a[0] * lifted; };
  return p;
}

TEST(Averaging, EquivariantExtensionRestrictsToAlpha) {
  corpus::Rng rng(3);
  for (const auto& c : coverings()) {
    const auto h = bruhat(c);
    Cochain f = corpus::random_cochain(c.base(), 1, rng);
    if (f.is_zero()) f.add(0, 1);
    f *= 1 / linf_norm(f);
    const auto problem = regular_problem(c, f);
    check_left_inverse(problem);
    for (int trial = 0; trial < 20; ++trial) {
      DenseVector b(problem.dim_b);
      Rational bound = 0;
      for (auto& x : b) {
        x = corpus::random_rational(rng);
        bound = std::max(bound, Rational(abs(x)));
      }
      const Cochain beta = equivariant_extend(c, h, problem, b);
      EXPECT_LE(linf_norm(beta), bound);
      const DenseVector a{corpus::random_rational(rng)};
      EXPECT_EQ(equivariant_extend(c, h, problem, problem.iota(a)), problem.alpha(a));
      for (int x = 0; x < c.deck().order(); ++x) {
        EXPECT_EQ(equivariant_extend(c, h, problem, problem.act_b(x, b)), c.act(x, beta));
      }
    }
  }
}

TEST(Theta, LineOverCircleIsCohomologousAndNormNonincreasing) {
  corpus::Rng rng(4);
  for (int k = 3; k <= 5; ++k) {
    const LineOverCircle line(k, LineOverCircle::Weight::kHat);
    for (long x = -2 * k; x <= 2 * k; ++x) {
      Rational total = 0;
      for (const auto& [g, w] : line.partition(x)) total += w;
      EXPECT_EQ(total, 1);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const Cochain f = corpus::random_cochain(line.base(), 1, rng);
      const Cochain t = line.theta(f);
      EXPECT_TRUE(coboundary_primitive(line.base(), f - t).has_value());
      EXPECT_LE(linf_norm(t), linf_norm(f));
    }
  }
}

TEST(Theta, ConeThetaIsAChainMapToConstants) {
  const auto k = sc::cone(sc::circle(4));
  const auto cone = simplicial::ConeDatum::make(k, 4);
  corpus::Rng rng(5);
  for (int n = 0; n <= 1; ++n) {
    const Cochain f = corpus::random_cochain(k, n, rng);
    const Cochain t = theta(cone, f);
    EXPECT_LE(linf_norm(t), linf_norm(f));
    EXPECT_EQ(theta(cone, coboundary(k, f)), coboundary(k, t));
  }
}

std::vector<IsometryGroupDatum> isometry_data() {
  return {cs::circle_rotations(6, 2, 0), cs::circle_rotations(8, 2, 4), cs::circle_rotations(12, 2, 6),
          cs::torus_shift()};
}

TEST(Transfer, LeftInverseOfRestrictionAndInvariant) {
  corpus::Rng rng(6);
  for (const auto& d : isometry_data()) {
    for (int n = 0; n <= d.total().dimension(); ++n) {
      const auto g_basis = d.invariant_basis(n, [&] {
        std::vector<int> all(static_cast<std::size_t>(d.group().order()));
        for (int i = 0; i < d.group().order(); ++i) all[static_cast<std::size_t>(i)] = i;
        return all;
      }());
      const auto gamma_basis = d.invariant_basis(n, d.subgroup());
      for (int trial = 0; trial < 5; ++trial) {
        Cochain fg(n), fgamma(n);
        for (const auto& v : g_basis) fg += corpus::random_rational(rng) * v;
        for (const auto& v : gamma_basis) fgamma += corpus::random_rational(rng) * v;
        ASSERT_TRUE(d.is_g_invariant(fg));
        ASSERT_TRUE(d.is_gamma_invariant(fgamma));
        EXPECT_EQ(transfer(d, restriction(d, fg)), fg);
        const Cochain t = transfer(d, fgamma);
        EXPECT_TRUE(d.is_g_invariant(t));
        EXPECT_LE(linf_norm(t), linf_norm(fgamma));
      }
    }
  }
}

TEST(Transfer, RestrictionIsIsometricOnCohomology) {
  for (const auto& d : isometry_data()) {
    std::vector<int> all(static_cast<std::size_t>(d.group().order()));
    for (int i = 0; i < d.group().order(); ++i) all[static_cast<std::size_t>(i)] = i;
    for (const Cochain& f : d.invariant_basis(1, all)) {
      if (!is_cocycle(d.total(), f)) continue;
      const auto r = res_isometry_check(d, f);
      EXPECT_TRUE(r.equal);
      EXPECT_EQ(r.g_seminorm, r.gamma_seminorm);
    }
  }
}

TEST(Transfer, RejectsNonFreeSubgroup) {
  const auto k = sc::circle(4);
  // reflection fixing vertices 0 and 2
  EXPECT_THROW(IsometryGroupDatum::make(k, {{0, 3, 2, 1}}, {{0, 3, 2, 1}}), PreconditionError);
}

TEST(DegreeOne, IntegratesExactCochains) {
  corpus::Rng rng(7);
  for (const auto& k : {sc::torus7(), sc::circle(5), sc::grid_torus(3, 4), sc::klein_bottle(3, 3)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Cochain f = coboundary(k, corpus::random_cochain(k, 0, rng));
      const Cochain F = integrate_degree1(k, f);
      EXPECT_EQ(coboundary(k, F), f);
      EXPECT_EQ(F.coefficient(0), 0);
    }
  }
  Cochain winding(1);
  winding.add(0, 1);
  EXPECT_THROW(integrate_degree1(sc::circle(4), winding), PreconditionError);
  EXPECT_THROW(integrate_degree1(sc::two_circles(3, 3), Cochain(1)), PreconditionError);
}

TEST(DegreeOne, AveragedPrimitiveIsInvariant) {
  corpus::Rng rng(8);
  for (const auto& c : coverings()) {
    const auto h = bruhat(c);
    for (int trial = 0; trial < 5; ++trial) {
      const Cochain base_f = coboundary(c.base(), corpus::random_cochain(c.base(), 0, rng));
      const Cochain f = lift_cochain(c, base_f);
      const Cochain F = integrate_degree1(c.total(), f);
      const auto avg = average_primitive(c, h, f, F);
      EXPECT_TRUE(c.is_invariant(avg.invariant));
      EXPECT_EQ(avg.invariant, F - avg.averaged);
      EXPECT_EQ(lift_cochain(c, avg.descended), avg.invariant);
      EXPECT_EQ(f - coboundary(c.total(), avg.invariant), coboundary(c.total(), avg.averaged));
    }
  }
}

}  // namespace
}  // namespace ellone::covering
