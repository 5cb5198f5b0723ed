#include <gtest/gtest.h>

#include <functional>
#include <memory>

#include "corpus.hpp"
#include "ellone/error.hpp"
#include "ellone/io.hpp"
#include "ellone/simplicial/affine_chains.hpp"
#include "ellone/simplicial/cone.hpp"
#include "ellone/simplicial/cover.hpp"
#include "ellone/simplicial/small_chains.hpp"
#include "ellone/simplicial/subdivision.hpp"
#include "ellone/standard_complexes.hpp"
#include "oracles.hpp"

namespace ellone::simplicial {
namespace {

namespace sc = ellone::standard;

AffineChain embed_random(const AffineChainModel& model, int degree, corpus::Rng& rng) {
  return model.embed(corpus::random_chain(model.complex(), degree, rng));
}

TEST(Subdivision, CountsForOneAndTwoRounds) {
  const auto rounds = iterate_subdivision(sc::simplex(2), 2);
  ASSERT_EQ(rounds.size(), 3u);
  EXPECT_EQ(rounds[1].counts, (std::vector<std::size_t>{7, 12, 6}));
  EXPECT_EQ(rounds[2].counts.back(), 36u);
  EXPECT_THROW(iterate_subdivision(sc::simplex(2), 7), ResourceError);
}

TEST(Subdivision, CommutesWithBoundaryAndFlattensBack) {
  corpus::Rng rng(21);
  for (const auto& [name, k] : corpus::complexes()) {
    const auto sub = SubdividedComplex::build(k);
    for (int n = 0; n <= k.dimension(); ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const Chain c = corpus::random_chain(k, n, rng);
        const Chain s = sub.sd(c);
        EXPECT_EQ(sub.flatten(s), c) << name;
        if (n >= 1) EXPECT_EQ(boundary(sub.subdivided(), s), sub.sd(boundary(k, c))) << name;
      }
    }
  }
}

TEST(Subdivision, VertexProvenance) {
  const auto sub = SubdividedComplex::build(sc::simplex(2));
  EXPECT_EQ(sub.subdivided().vertex_count(), 7);
  EXPECT_EQ(sub.barycenter({2, 0}), 6);
  EXPECT_EQ(sub.face_of_vertex(4).dim, 1);
  const auto& top = sub.subdivided().simplex(2, 0);
  EXPECT_EQ(sub.carrier({2, 0}).dim, 2);
  EXPECT_EQ(top.back(), 6);
}

TEST(AffineModel, SubdivisionIsAChainMapHomotopicToIdentity) {
  corpus::Rng rng(8);
  for (const auto& [name, k] : corpus::complexes()) {
    const AffineChainModel model(k);
    for (int n = 0; n <= std::min(k.dimension(), 2); ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const AffineChain c = embed_random(model, n, rng);
        const AffineChain s = model.sd(c);
        EXPECT_EQ(model.boundary(s), model.sd(model.boundary(c))) << name;
        // dD + Dd = sd - Id
        const AffineChain lhs = model.boundary(model.prism(c)) + model.prism(model.boundary(c));
        EXPECT_EQ(lhs, s - c) << name << " degree " << n;
        // and once more one level down the tower
        const AffineChain lhs2 = model.boundary(model.prism(s)) + model.prism(model.boundary(s));
        EXPECT_EQ(lhs2, model.sd(s) - s) << name;
      }
    }
  }
}

TEST(AffineModel, BarycentersAndCarriers) {
  const AffineChainModel model(sc::simplex(2));
  const PointId b = model.barycenter({0, 1, 2});
  const auto coords = model.coordinates(b);
  ASSERT_EQ(coords.size(), 3u);
  for (const auto& [v, w] : coords) EXPECT_EQ(w, Rational(1, 3));
  EXPECT_EQ(model.support(b).dim, 2);
  EXPECT_EQ(model.barycenter({0, 0, 1}), model.intern({{0, Rational(2, 3)}, {1, Rational(1, 3)}}));
  EXPECT_EQ(model.carrier({0, 1})->dim, 1);
  const AffineChainModel circle(sc::circle(4));
  EXPECT_FALSE(circle.carrier({0, 2}).has_value());
}

TEST(SmallChains, XiMatchesBruteForceSubdivision) {
  for (const auto& [name, k] : corpus::complexes()) {
    const AffineChainModel model(k);
    const auto gens = corpus::cover_generators(k);
    const auto covs = corpus::covers(k);
    for (std::size_t c = 0; c < covs.size(); ++c) {
      for (int n = 0; n <= k.dimension(); ++n) {
        for (const Simplex& s : k.simplices(n)) {
          std::vector<std::vector<oracle::Exact>> pts;
          for (int v : s) {
            std::vector<oracle::Exact> p(static_cast<std::size_t>(k.vertex_count()));
            p[static_cast<std::size_t>(v)] = 1;
            pts.push_back(p);
          }
          EXPECT_EQ(xi(model, covs[c], model.embed(s)), oracle::brute_xi(pts, gens[c], 6)) << name << " cover " << c;
        }
      }
    }
  }
}

TEST(SmallChains, XiRespectsCap) {
  const auto k = sc::circle(3);
  const AffineChainModel model(k);
  const auto cover = OpenCover::vertex_stars(k);
  EXPECT_THROW(xi(model, cover, model.embed(Simplex{0, 1}), 0), ResourceError);
}

TEST(SmallChains, TauIsSmallAndHomotopicToInclusion) {
  corpus::Rng rng(4);
  for (const auto& [name, k] : corpus::complexes()) {
    const AffineChainModel model(k);
    for (const OpenCover& cover : corpus::covers(k)) {
      for (int n = 0; n <= k.dimension(); ++n) {
        const AffineChain c = embed_random(model, n, rng);
        const AffineChain t = tau(model, cover, c);
        EXPECT_TRUE(is_small(model, cover, t)) << name;
        EXPECT_EQ(model.boundary(t), tau(model, cover, model.boundary(c))) << name;
        const AffineChain rhs = model.boundary(omega(model, cover, c)) + omega(model, cover, model.boundary(c));
        EXPECT_EQ(t - c, rhs) << name << " degree " << n;
      }
    }
  }
}

TEST(SmallChains, CoverValidation) {
  const auto k = sc::circle(4);
  EXPECT_THROW(OpenCover::from_generators(k, {"U"}, {{{0}, {1}}}).require_covers(), PreconditionError);
  const auto cover = OpenCover::from_json(k, io::parse_json(R"({"sets": {"A": [[0], [1]], "B": [[2], [3]]}})"));
  EXPECT_TRUE(cover.covers());
  EXPECT_TRUE(cover.is_small({0, 1}));
  EXPECT_FALSE(cover.is_small({1, 2}));
}

// f = delta g with g supported on non-small simplices vanishes on every small
// simplex; its dual Omega image then satisfies f + delta(Omega f) = 0.
TEST(LocallyZero, DualOmegaInvertsCoboundary) {
  const auto k = sc::torus7();
  auto model = std::make_shared<const AffineChainModel>(k);
  auto cover = std::make_shared<const OpenCover>(OpenCover::vertex_stars(k));
  const auto probes = probe_simplices(*model, 2, 1);
  ASSERT_FALSE(probes.empty());
  for (int seed = 0; seed < 5; ++seed) {
    const AffineCochain g(1, [model, cover, seed](const AffineSimplex& s) {
      if (is_small(*model, *cover, s)) return Rational(0);
      std::size_t h = static_cast<std::size_t>(seed) * 1000003u;
      for (PointId p : s) h = h * 31u + p;
      return Rational(static_cast<long>(h % 7) - 3, 1 + static_cast<long>(h % 3));
    });
    const AffineCochain f = coboundary(g);
    const AffineCochain w = omega_dual_locally_zero(model, cover, f, probes);
    const AffineCochain dw = coboundary(w);
    std::size_t nonzero = 0;
    for (const AffineSimplex& s : probes) {
      EXPECT_EQ(f(s) + dw(s), 0);
      if (f(s) != 0) ++nonzero;
    }
    EXPECT_GT(nonzero, 0u);
  }
}

TEST(LocallyZero, RejectsCochainsSeenOnSmallSimplices) {
  const auto k = sc::simplex(2);
  auto model = std::make_shared<const AffineChainModel>(k);
  auto cover = std::make_shared<const OpenCover>(OpenCover::whole(k));
  const AffineCochain f(2, [](const AffineSimplex&) { return Rational(1); });
  EXPECT_THROW(omega_dual_locally_zero(model, cover, f, probe_simplices(*model, 2, 1)), PreconditionError);
}

TEST(Cone, ContractingHomotopyIdentity) {
  const auto k = sc::cone(sc::circle(4));
  const auto cone = ConeDatum::make(k, 4);
  corpus::Rng rng(2);
  for (int n = 0; n <= 1; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Chain c = corpus::random_chain(k, n, rng);
      const Chain lhs = boundary(k, cone(c)) + cone(boundary(k, c, Augmentation::kOn));
      EXPECT_EQ(lhs, c);
    }
  }
  EXPECT_THROW(ConeDatum::make(sc::circle(4), 0), PreconditionError);
}

}  // namespace
}  // namespace ellone::simplicial
