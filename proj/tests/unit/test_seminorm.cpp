#include <gtest/gtest.h>

#include <cstdlib>

#include "corpus.hpp"
#include "ellone/error.hpp"
#include "ellone/homology.hpp"
#include "ellone/seminorm/fundamental_class.hpp"
#include "ellone/seminorm/lp.hpp"
#include "ellone/seminorm/seminorm.hpp"
#include "ellone/standard_complexes.hpp"
#include "oracles.hpp"

namespace ellone::seminorm {
namespace {

namespace sc = ellone::standard;

Relation relation_of(int r) {
  return r < 0 ? Relation::kLessEqual : (r == 0 ? Relation::kEqual : Relation::kGreaterEqual);
}

TEST(LinearProgram, AgreesWithVertexEnumeration) {
  corpus::Rng rng(17);
  std::uniform_int_distribution<int> rel(-1, 1);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    oracle::SmallLP ref;
    ref.maximize = trial % 2 == 0;
    LPProblem p(n, ref.maximize ? Sense::kMaximize : Sense::kMinimize);
    for (std::size_t i = 0; i < n; ++i) {
      p.objective[i] = corpus::random_rational(rng);
      ref.objective.push_back(oracle::exact(p.objective[i]));
    }
    for (int r = 0; r < 3; ++r) {
      SparseVector row;
      std::vector<oracle::Exact> dense(n);
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = corpus::random_rational(rng);
        dense[i] = oracle::exact(row[i]);
      }
      const int relation = rel(rng);
      const Rational rhs = corpus::random_rational(rng);
      p.add_constraint(row, relation_of(relation), rhs);
      ref.rows.push_back(dense);
      ref.relations.push_back(relation);
      ref.rhs.push_back(oracle::exact(rhs));
    }
    // keep the region bounded
    SparseVector cap;
    for (std::size_t i = 0; i < n; ++i) cap[i] = 1;
    p.add_constraint(cap, Relation::kLessEqual, 10);
    ref.rows.push_back(std::vector<oracle::Exact>(n, 1));
    ref.relations.push_back(-1);
    ref.rhs.push_back(10);

    const auto expected = oracle::vertex_enumeration(ref);
    for (PivotRule rule : {PivotRule::kBland, PivotRule::kDantzig}) {
      const auto cert = lp_solve(p, rule);
      if (!expected) {
        EXPECT_EQ(cert.status, LPStatus::kInfeasible) << "trial " << trial;
        continue;
      }
      ASSERT_EQ(cert.status, LPStatus::kOptimal) << "trial " << trial;
      EXPECT_EQ(oracle::exact(cert.value), *expected) << "trial " << trial;
      std::string why;
      EXPECT_TRUE(verify_certificate(p, cert, &why)) << why;
    }
    expected ? ++optimal : ++infeasible;
  }
  EXPECT_GT(optimal, 20);
  EXPECT_GT(infeasible, 5);
}

TEST(LinearProgram, DetectsUnboundedness) {
  LPProblem p(2, Sense::kMaximize);
  p.objective = {1, 1};
  p.add_constraint({{0, 1}, {1, -1}}, Relation::kLessEqual, 1);
  EXPECT_EQ(lp_solve(p).status, LPStatus::kUnbounded);
}

TEST(LinearProgram, RejectsTamperedCertificates) {
  LPProblem p(2, Sense::kMinimize);
  p.objective = {1, 2};
  p.add_constraint({{0, 1}, {1, 1}}, Relation::kGreaterEqual, 3);
  auto cert = lp_solve(p);
  ASSERT_EQ(cert.status, LPStatus::kOptimal);
  EXPECT_EQ(cert.value, 3);
  EXPECT_TRUE(verify_certificate(p, cert));
  auto wrong_dual = cert;
  wrong_dual.dual[0] = Rational(1, 2);
  EXPECT_FALSE(verify_certificate(p, wrong_dual));
  auto wrong_primal = cert;
  wrong_primal.primal = {1, 1};
  std::string why;
  EXPECT_FALSE(verify_certificate(p, wrong_primal, &why));
  EXPECT_FALSE(why.empty());
}

TEST(LinearProgram, PivotRuleFromEnvironment) {
  ::unsetenv("ELLONE_PIVOT");
  EXPECT_EQ(pivot_rule_from_env(), PivotRule::kBland);
  ::setenv("ELLONE_PIVOT", "bland", 1);
  EXPECT_EQ(pivot_rule_from_env(), PivotRule::kBland);
  ::setenv("ELLONE_PIVOT", "steepest", 1);
  EXPECT_THROW(pivot_rule_from_env(), PreconditionError);
  ::unsetenv("ELLONE_PIVOT");
}

TEST(Seminorm, LinfMinimizeAgreesWithEnumeration) {
  corpus::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    DenseVector values(3), dir(3);
    for (std::size_t i = 0; i < 3; ++i) {
      values[i] = corpus::random_rational(rng);
      dir[i] = corpus::random_rational(rng);
    }
    const auto got = linf_minimize(values, {dir});
    // variables (t, lambda+, lambda-): min t with -t <= v_i + lambda d_i <= t
    oracle::SmallLP ref;
    ref.objective = {1, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) {
      const oracle::Exact v = oracle::exact(values[i]), d = oracle::exact(dir[i]);
      ref.rows.push_back({1, -d, d});
      ref.relations.push_back(1);
      ref.rhs.push_back(v);
      ref.rows.push_back({1, d, -d});
      ref.relations.push_back(1);
      ref.rhs.push_back(-v);
    }
    const auto expected = oracle::vertex_enumeration(ref);
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(oracle::exact(got.value), *expected);
  }
}

Chain fundamental_cycle_of_circle(const OrientedComplex& k) {
  Chain z(1);
  for (std::size_t e = 0; e < k.count(1); ++e) {
    const Simplex& s = k.simplex(1, e);
    z.add(e, s[1] == s[0] + 1 ? 1 : -1);
  }
  return z;
}

TEST(Seminorm, CircleValues) {
  for (int k = 3; k <= 6; ++k) {
    const auto circle = sc::circle(k);
    const Chain z = fundamental_cycle_of_circle(circle);
    ASSERT_TRUE(is_cycle(circle, z));
    const auto l1 = l1_seminorm(circle, z);
    EXPECT_EQ(l1.value, k);
    EXPECT_TRUE(verify_certificate(l1.problem, l1.certificate));
    Cochain f(1);
    f.add(0, 1);
    const auto linf = linf_seminorm(circle, f);
    EXPECT_EQ(linf.value, Rational(1, k));
    EXPECT_EQ(linf_norm(linf.representative), Rational(1, k));
    EXPECT_TRUE(coboundary_primitive(circle, linf.representative - f).has_value());
  }
}

TEST(Seminorm, RepresentativesStayInTheClass) {
  const auto k = sc::grid_torus(3, 3);
  corpus::Rng rng(6);
  const auto basis = homology_basis(k, 1);
  ASSERT_EQ(basis.size(), 2u);
  for (int trial = 0; trial < 5; ++trial) {
    const Chain z = basis[0] + boundary(k, corpus::random_chain(k, 2, rng));
    const auto r = l1_seminorm(k, z);
    EXPECT_EQ(r.representative, z + boundary(k, r.gamma));
    EXPECT_EQ(l1_norm(r.representative), r.value);
    EXPECT_EQ(r.value, 3);
  }
}

TEST(Seminorm, RejectsNonCycles) {
  const auto k = sc::circle(3);
  Chain c(1);
  c.add(0, 1);
  EXPECT_THROW(l1_seminorm(k, c), PreconditionError);
  Cochain f(0);
  f.add(0, 1);
  EXPECT_THROW(linf_seminorm(k, f), PreconditionError);
}

TEST(Duality, FundamentalClassesMatchReciprocalDual) {
  const std::vector<OrientedComplex> manifolds{sc::circle(3), sc::circle(5), sc::sphere(2), sc::torus7(),
                                               sc::grid_torus(3, 3), sc::sphere(3)};
  const std::vector<Rational> volumes{3, 5, 4, 14, 18, 5};
  for (std::size_t i = 0; i < manifolds.size(); ++i) {
    const auto& k = manifolds[i];
    const auto fc = fundamental_class(k);
    const auto d = duality_check(k, fc.cycle);
    ASSERT_EQ(d.status, DualityStatus::kOk);
    EXPECT_TRUE(d.equal);
    EXPECT_EQ(d.l1, volumes[i]);
    EXPECT_EQ(d.dual_optimum * d.l1, 1);
    EXPECT_EQ(kronecker(d.phi, fc.cycle), 1);
    EXPECT_EQ(linf_norm(d.phi), d.dual_optimum);
    EXPECT_TRUE(is_cocycle(k, d.phi));
    EXPECT_TRUE(verify_certificate(d.primal.problem, d.primal.certificate));
    EXPECT_TRUE(verify_certificate(d.dual_problem, d.dual_certificate));
  }
}

TEST(Duality, NullhomologousCycleIsDegenerate) {
  const auto k = sc::simplex(2);
  const Chain z = boundary(k, Chain(2, {{0, Rational(1)}}));
  const auto d = duality_check(k, z);
  EXPECT_EQ(d.status, DualityStatus::kDegenerate);
  EXPECT_EQ(d.l1, 0);
}

TEST(FundamentalClass, OrientableClosedSurfaces) {
  for (const auto& k : {sc::torus7(), sc::sphere(2), sc::grid_torus(3, 4)}) {
    const auto fc = fundamental_class(k);
    EXPECT_TRUE(is_cycle(k, fc.cycle));
    EXPECT_EQ(fc.cycle.size(), k.count(2));
    for (const auto& [idx, v] : fc.cycle) EXPECT_TRUE(v == 1 || v == -1);
    EXPECT_EQ(fc.witness.size() + 1, k.count(2));
  }
}

TEST(FundamentalClass, RejectsNonOrientableAndBoundary) {
  EXPECT_THROW(fundamental_class(sc::klein_bottle(3, 3)), NonOrientableError);
  EXPECT_THROW(fundamental_class(sc::moebius_strip(3)), NonOrientableError);
  try {
    fundamental_class(sc::grid_disk(2, 2));
    FAIL() << "a disk has no fundamental class";
  } catch (const NonOrientableError&) {
    FAIL() << "a disk is orientable";
  } catch (const PreconditionError&) {
  }
  EXPECT_THROW(fundamental_class(sc::point()), PreconditionError);
}

}  // namespace
}  // namespace ellone::seminorm
