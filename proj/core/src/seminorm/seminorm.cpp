#include "ellone/seminorm/seminorm.hpp"

#include "ellone/error.hpp"
#include "ellone/homology.hpp"

namespace ellone::seminorm {

LinfMinimum linf_minimize(const DenseVector& values, const std::vector<DenseVector>& directions, PivotRule rule) {
  const std::size_t m = values.size();
  const std::size_t p = directions.size();
  // Variables: t, lambda+ (p), lambda- (p).
  LPProblem lp(1 + 2 * p, Sense::kMinimize);
  lp.objective[0] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    SparseVector upper, lower;
    upper[0] = -1;
    lower[0] = -1;
    for (std::size_t k = 0; k < p; ++k) {
      const Rational& d = directions[k].at(i);
      if (d == 0) continue;
      upper[1 + k] = d;
      upper[1 + p + k] = -d;
      lower[1 + k] = -d;
      lower[1 + p + k] = d;
    }
    lp.add_constraint(std::move(upper), Relation::kLessEqual, -values[i]);
    lp.add_constraint(std::move(lower), Relation::kLessEqual, values[i]);
  }
  LinfMinimum out{0, DenseVector(p), values, lp, lp_solve(lp, rule)};
  if (out.certificate.status != LPStatus::kOptimal) throw Error("sup-norm program is not optimal");
  out.value = out.certificate.value;
  for (std::size_t k = 0; k < p; ++k) {
    out.lambda[k] = out.certificate.primal[1 + k] - out.certificate.primal[1 + p + k];
    if (out.lambda[k] == 0) continue;
    for (std::size_t i = 0; i < m; ++i) out.minimizer[i] += out.lambda[k] * directions[k][i];
  }
  return out;
}

L1Result l1_seminorm(const OrientedComplex& k, const Chain& z, PivotRule rule) {
  validate(k, z);
  if (!is_cycle(k, z)) throw PreconditionError("chain is not a cycle");
  const int n = z.degree();
  const std::size_t cn = k.count(n);
  const std::size_t cu = n + 1 <= k.dimension() ? k.count(n + 1) : 0;
  const SparseMatrix d = cu > 0 ? boundary_matrix(k, n + 1) : SparseMatrix(cn, 0);
  const SparseMatrix dt = d.transpose();
  // Variables: beta+ (cn), beta- (cn), gamma+ (cu), gamma- (cu).
  LPProblem lp(2 * cn + 2 * cu, Sense::kMinimize);
  for (std::size_t i = 0; i < 2 * cn; ++i) lp.objective[i] = 1;
  for (std::size_t i = 0; i < cn; ++i) {
    SparseVector row;
    row[i] = 1;
    row[cn + i] = -1;
    for (const auto& [j, v] : dt.columns[i]) {
      row[2 * cn + j] = -v;
      row[2 * cn + cu + j] = v;
    }
    lp.add_constraint(std::move(row), Relation::kEqual, z.coefficient(i));
  }
  L1Result out{0, Chain(n), Chain(n + 1), lp, lp_solve(lp, rule)};
  if (out.certificate.status != LPStatus::kOptimal) throw Error("l1 program is not optimal");
  out.value = out.certificate.value;
  const auto& x = out.certificate.primal;
  for (std::size_t i = 0; i < cn; ++i) out.representative.add(i, x[i] - x[cn + i]);
  for (std::size_t j = 0; j < cu; ++j) out.gamma.add(j, x[2 * cn + j] - x[2 * cn + cu + j]);
  return out;
}

LinfResult linf_seminorm(const OrientedComplex& k, const Cochain& f, PivotRule rule) {
  validate(k, f);
  if (!is_cocycle(k, f)) throw PreconditionError("cochain is not a cocycle");
  const int n = f.degree();
  const std::size_t cn = k.count(n);
  std::vector<DenseVector> directions;
  if (n >= 1) {
    for (std::size_t j = 0; j < k.count(n - 1); ++j) {
      Cochain e(n - 1);
      e.add(j, 1);
      directions.push_back(to_dense(coboundary(k, e), cn));
    }
  }
  LinfMinimum m = linf_minimize(to_dense(f, cn), directions, rule);
  LinfResult out{m.value, cochain_from_dense(n, m.minimizer), Cochain(n - 1), std::move(m.problem),
                 std::move(m.certificate)};
  for (std::size_t j = 0; j < m.lambda.size(); ++j) out.eta.add(j, m.lambda[j]);
  return out;
}

DualityResult duality_check(const OrientedComplex& k, const Chain& z, PivotRule rule) {
  DualityResult out;
  out.primal = l1_seminorm(k, z, rule);
  out.l1 = out.primal.value;
  const int n = z.degree();
  const std::size_t cn = k.count(n);
  // Variables: t, phi+ (cn), phi- (cn).
  LPProblem lp(1 + 2 * cn, Sense::kMinimize);
  lp.objective[0] = 1;
  for (std::size_t i = 0; i < cn; ++i) {
    lp.add_constraint({{0, Rational(-1)}, {1 + i, Rational(1)}, {1 + cn + i, Rational(-1)}}, Relation::kLessEqual, 0);
    lp.add_constraint({{0, Rational(-1)}, {1 + i, Rational(-1)}, {1 + cn + i, Rational(1)}}, Relation::kLessEqual, 0);
  }
  if (n + 1 <= k.dimension()) {
    const SparseMatrix d = boundary_matrix(k, n + 1);
    for (std::size_t j = 0; j < d.cols; ++j) {
      SparseVector row;
      for (const auto& [i, v] : d.columns[j]) {
        row[1 + i] = v;
        row[1 + cn + i] = -v;
      }
      lp.add_constraint(std::move(row), Relation::kEqual, 0);
    }
  }
  SparseVector pairing;
  for (const auto& [i, v] : z) {
    pairing[1 + i] = v;
    pairing[1 + cn + i] = -v;
  }
  lp.add_constraint(std::move(pairing), Relation::kEqual, 1);
  out.dual_problem = lp;
  out.dual_certificate = lp_solve(lp, rule);
  if (out.dual_certificate.status != LPStatus::kOptimal) {
    out.status = DualityStatus::kDegenerate;
    out.equal = out.l1 == 0;
    return out;
  }
  out.status = DualityStatus::kOk;
  out.dual_optimum = out.dual_certificate.value;
  out.phi = Cochain(n);
  for (std::size_t i = 0; i < cn; ++i) {
    out.phi.add(i, out.dual_certificate.primal[1 + i] - out.dual_certificate.primal[1 + cn + i]);
  }
  if (out.dual_optimum == 0) throw Error("dual optimum vanished on a non-trivial class");
  out.sup_value = 1 / out.dual_optimum;
  out.equal = out.sup_value == out.l1;
  return out;
}

}  // namespace ellone::seminorm
