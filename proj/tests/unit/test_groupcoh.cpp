#include <gtest/gtest.h>

#include "corpus.hpp"
#include "ellone/error.hpp"
#include "ellone/groupcoh/bar.hpp"
#include "ellone/groupcoh/cohomology.hpp"
#include "ellone/groupcoh/extension.hpp"
#include "ellone/groupcoh/finite_group.hpp"
#include "ellone/io.hpp"
#include "oracles.hpp"

namespace ellone::groupcoh {
namespace {

std::vector<FiniteGroup> groups() {
  return {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)};
}

BarCochain random_bar(int order, int degree, corpus::Rng& rng) {
  BarCochain f(order, degree);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = corpus::random_rational(rng);
  return f;
}

TEST(FiniteGroup, TablesAndPermutations) {
  const auto s3 = FiniteGroup::symmetric(3);
  EXPECT_EQ(s3.order(), 6);
  for (int a = 0; a < 6; ++a) {
    EXPECT_EQ(s3.multiply(a, s3.inverse(a)), s3.identity());
    for (int b = 0; b < 6; ++b) {
      for (int c = 0; c < 6; ++c) EXPECT_EQ(s3.multiply(s3.multiply(a, b), c), s3.multiply(a, s3.multiply(b, c)));
    }
  }
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {0, 1}}), PreconditionError);
  EXPECT_THROW(FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}), ResourceError);
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24);
  const auto j = io::parse_json(R"({"degree": 3, "generators": [[1, 2, 0]]})");
  EXPECT_EQ(FiniteGroup::from_json(j).order(), 3);
  EXPECT_THROW(FiniteGroup::from_json(io::parse_json(R"({"order": 2})")), ParseError);
}

TEST(Bar, DifferentialSquaresToZero) {
  corpus::Rng rng(1);
  for (const auto& g : groups()) {
    for (int n = -1; n <= 1; ++n) {
      const BarCochain f = random_bar(g.order(), n, rng);
      const BarCochain ddf = bar_differential(bar_differential(f));
      EXPECT_EQ(sup_norm(ddf), 0);
    }
  }
}

TEST(Bar, ContractingHomotopyIdentityAndNorm) {
  corpus::Rng rng(2);
  for (const auto& g : groups()) {
    std::vector<Rational> mu(static_cast<std::size_t>(g.order()), Rational(1, g.order()));
    for (const auto& k : {ContractingHomotopy(g), ContractingHomotopy(g, mu)}) {
      for (int n = 0; n <= 2; ++n) {
        const BarCochain f = random_bar(g.order(), n, rng);
        const BarCochain lhs = bar_differential(k(f)) + k(bar_differential(f));
        EXPECT_EQ(lhs, f);
        EXPECT_LE(sup_norm(k(f)), sup_norm(f));
      }
    }
  }
  EXPECT_THROW(ContractingHomotopy(FiniteGroup::cyclic(2), {Rational(1), Rational(1)}), PreconditionError);
}

TEST(Bar, ActionIsALeftActionCommutingWithDelta) {
  corpus::Rng rng(3);
  const auto g = FiniteGroup::symmetric(3);
  const BarCochain f = random_bar(6, 1, rng);
  for (int a = 0; a < 6; ++a) {
    EXPECT_EQ(bar_differential(act(g, a, f)), act(g, a, bar_differential(f)));
    for (int b = 0; b < 6; ++b) EXPECT_EQ(act(g, a, act(g, b, f)), act(g, g.multiply(a, b), f));
  }
}

TEST(Cohomology, RanksVanishAndPipelinesAgree) {
  for (const auto& g : groups()) {
    for (int n = 1; n <= 2; ++n) {
      const auto orbit = group_cohomology(g, n, Pipeline::kOrbit);
      const auto bounded = group_cohomology(g, n, Pipeline::kBounded);
      EXPECT_EQ(orbit.rank, oracle::invariant_bar_rank(g.table(), n));
      EXPECT_EQ(orbit.rank, 0u);
      EXPECT_EQ(bounded.rank, orbit.rank);
      EXPECT_EQ(bounded.seminorms, orbit.seminorms);
    }
    const auto h0 = group_cohomology(g, 0, Pipeline::kOrbit);
    EXPECT_EQ(h0.rank, oracle::invariant_bar_rank(g.table(), 0));
    ASSERT_EQ(h0.rank, 1u);
    EXPECT_EQ(h0.seminorms[0], canonical_seminorm(g, h0.basis[0], Pipeline::kBounded));
  }
  EXPECT_THROW(group_cohomology(FiniteGroup::cyclic(2), 4), ResourceError);
}

TEST(Cohomology, InvariantBasesMatchReynoldsProjection) {
  for (const auto& g : groups()) {
    for (int n = 0; n <= 2; ++n) {
      const auto basis = invariant_basis(g, n);
      std::size_t expected = 1;
      for (int i = 0; i < n; ++i) expected *= static_cast<std::size_t>(g.order());
      EXPECT_EQ(basis.size(), expected);
      for (std::size_t orbit = 0; orbit < expected; ++orbit) {
        EXPECT_TRUE(is_invariant(g, orbit_cochain(g, n, orbit)));
      }
      const SparseMatrix d0 = orbit_differential(g, n);
      const SparseMatrix d1 = orbit_differential(g, n + 1);
      EXPECT_TRUE(d1.multiply(d0).is_zero());
    }
  }
}

TEST(Extension, BarResolutionExtendsToIdentity) {
  corpus::Rng rng(4);
  for (const auto& g : groups()) {
    const auto e = bar_resolution(g);
    for (int n = 0; n <= 2; ++n) {
      const BarCochain f = random_bar(g.order(), n, rng);
      EXPECT_EQ(extend_to_bar(e, n, to_vector(f)), f);
    }
  }
}

TEST(Extension, WeightedHomotopyGivesNormNonincreasingChainMap) {
  corpus::Rng rng(5);
  for (const auto& g : groups()) {
    std::vector<Rational> mu(static_cast<std::size_t>(g.order()));
    mu[0] = Rational(1, 2);
    mu[static_cast<std::size_t>(g.order() - 1)] += Rational(1, 2);
    const auto e = bar_resolution(g, mu);
    for (int n = 0; n <= 2; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const DenseVector v = to_vector(random_bar(g.order(), n, rng));
        const BarCochain a = extend_to_bar(e, n, v);
        EXPECT_LE(sup_norm(a), e.norm(n, v));
        EXPECT_EQ(bar_differential(a), extend_to_bar(e, n + 1, e.differential(n, v)));
        for (int h = 0; h < g.order(); ++h) EXPECT_EQ(extend_to_bar(e, n, e.act(n, h, v)), act(g, h, a));
      }
    }
  }
}

}  // namespace
}  // namespace ellone::groupcoh
