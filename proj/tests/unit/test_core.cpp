#include <gtest/gtest.h>

#include "corpus.hpp"
#include "ellone/chain.hpp"
#include "ellone/error.hpp"
#include "ellone/homology.hpp"
#include "ellone/io.hpp"
#include "ellone/linalg.hpp"
#include "ellone/standard_complexes.hpp"
#include "oracles.hpp"

namespace ellone {
namespace {

namespace sc = ellone::standard;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2/1")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(" 1"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_EQ(to_decimal(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(to_decimal(Rational(-7, 2), 2), "-3.50");
}

TEST(Complex, CompletesFacesAndKeepsListingOrder) {
  const auto k = OrientedComplex::from_simplices(4, std::vector<Simplex>{{2, 3}, {0, 1, 2}});
  EXPECT_EQ(k.count(0), 4u);
  EXPECT_EQ(k.count(1), 4u);
  EXPECT_EQ(k.count(2), 1u);
  EXPECT_EQ(k.simplex(1, 0), (Simplex{2, 3}));
  EXPECT_EQ(k.simplex(1, 1), (Simplex{0, 1}));
  EXPECT_EQ(k.simplex(1, 2), (Simplex{0, 2}));
  EXPECT_EQ(k.simplex(1, 3), (Simplex{1, 2}));
  EXPECT_EQ(k.face_indices(2, 0), (std::vector<std::size_t>{3, 2, 1}));
}

TEST(Complex, RejectsBadInput) {
  EXPECT_THROW(OrientedComplex::from_simplices(2, std::vector<Simplex>{{0, 0}}), PreconditionError);
  EXPECT_THROW(OrientedComplex::from_simplices(2, std::vector<Simplex>{{0, 2}}), PreconditionError);
  EXPECT_THROW(OrientedComplex::from_simplices(2, std::vector<Simplex>{{0, 1}, {1, 0}}), PreconditionError);
}

TEST(Complex, SortWithSign) {
  std::vector<int> t{2, 0, 1};
  EXPECT_EQ(sort_with_sign(t), 1);
  EXPECT_EQ(t, (std::vector<int>{0, 1, 2}));
  std::vector<int> u{1, 0, 2};
  EXPECT_EQ(sort_with_sign(u), -1);
  std::vector<int> w{1, 1};
  EXPECT_EQ(sort_with_sign(w), 0);
}

TEST(ChainLaws, BoundarySquaresToZeroAndAdjointOnCorpus) {
  corpus::Rng rng(11);
  for (const auto& [name, k] : corpus::complexes()) {
    for (int n = 0; n <= k.dimension(); ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        const Chain c = corpus::random_chain(k, n, rng);
        const Chain dc = boundary(k, c, Augmentation::kOn);
        if (n >= 1) EXPECT_TRUE(boundary(k, dc, n == 1 ? Augmentation::kOn : Augmentation::kOff).is_zero()) << name;
        if (n >= 1) {
          const Cochain f = corpus::random_cochain(k, n - 1, rng);
          EXPECT_EQ(kronecker(coboundary(k, f), c), kronecker(f, boundary(k, c))) << name;
        }
      }
    }
  }
}

TEST(ChainLaws, AugmentedPointBoundaryIsCoefficientSum) {
  const auto k = sc::circle(3);
  Chain c(0);
  c.add(0, Rational(2));
  c.add(2, Rational(-1, 2));
  const Chain e = boundary(k, c, Augmentation::kOn);
  EXPECT_EQ(e.degree(), -1);
  EXPECT_EQ(e.coefficient(0), Rational(3, 2));
}

TEST(Homology, MatchesIndependentBettiNumbers) {
  for (const auto& [name, k] : corpus::complexes()) {
    const auto expected = oracle::betti_numbers(corpus::listed(k));
    const auto got = homology_ranks(k);
    ASSERT_EQ(got.size(), expected.size()) << name;
    for (std::size_t n = 0; n < got.size(); ++n) EXPECT_EQ(got[n], expected[n]) << name << " degree " << n;
  }
}

TEST(Homology, KnownSurfaces) {
  EXPECT_EQ(homology_ranks(sc::torus7()), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(homology_ranks(sc::grid_torus(3, 4)), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(homology_ranks(sc::klein_bottle(3, 3)), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(homology_ranks(sc::moebius_strip(3)), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(homology_ranks(sc::sphere(3)), (std::vector<std::size_t>{1, 0, 0, 1}));
}

TEST(Homology, PointSatisfiesDimensionAxiom) {
  const auto p = sc::point();
  EXPECT_EQ(homology_rank(p, 0), 1u);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(homology_rank(p, n), 0u);
}

TEST(Homology, PrimitivesSolveExactly) {
  const auto k = sc::simplex(2);
  corpus::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Cochain eta = corpus::random_cochain(k, 0, rng);
    const Cochain f = coboundary(k, eta);
    const auto found = coboundary_primitive(k, f);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(coboundary(k, *found), f);
  }
  const auto circle = sc::circle(4);
  Cochain winding(1);
  winding.add(0, Rational(1));
  EXPECT_FALSE(coboundary_primitive(circle, winding).has_value());
  EXPECT_EQ(cohomology_basis(circle, 1).size(), 1u);
  for (const Chain& z : homology_basis(sc::torus7(), 1)) EXPECT_TRUE(is_cycle(sc::torus7(), z));
}

TEST(LinearAlgebra, RankAndSolveAgreeWithOracle) {
  corpus::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix m(4, 5);
    oracle::ExactMatrix dense(4, std::vector<oracle::Exact>(5));
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        if (rng() % 2) continue;
        const Rational v = corpus::random_rational(rng);
        m.add(r, c, v);
        dense[r][c] = oracle::exact(v);
      }
    }
    EXPECT_EQ(rank(m), oracle::dense_rank(dense));
    for (const auto& v : kernel_basis(m)) {
      for (const auto& x : m.apply(v)) EXPECT_EQ(x, 0);
    }
    DenseVector x(5);
    for (auto& xi : x) xi = corpus::random_rational(rng);
    const auto b = m.apply(x);
    const auto y = solve(m, b);
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(m.apply(*y), b);
  }
}

TEST(Io, ReportsSyntaxErrorPosition) {
  try {
    io::parse_json("{\n  \"vertices\": 3,\n  \"simplices\": [[0, 1]\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Io, RoundTripsComplexesAndChains) {
  const auto k = sc::torus7();
  EXPECT_EQ(io::complex_from_json(io::complex_to_json(k)), k);
  corpus::Rng rng(1);
  const Chain c = corpus::random_chain(k, 2, rng);
  EXPECT_EQ(io::chain_from_json(io::to_json(c)), c);
  const Cochain f = corpus::random_cochain(k, 1, rng);
  EXPECT_EQ(io::cochain_from_json(io::to_json(f)), f);
  EXPECT_THROW(io::chain_from_json(io::parse_json(R"({"degree": 1, "coeffs": {"0": "1/0"}})")), ParseError);
  EXPECT_THROW(io::complex_from_json(io::parse_json(R"({"vertices": 2})")), ParseError);
}

}  // namespace
}  // namespace ellone
