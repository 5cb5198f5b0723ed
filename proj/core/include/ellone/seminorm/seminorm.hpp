#pragma once

#include <vector>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"
#include "ellone/seminorm/lp.hpp"

namespace ellone::seminorm {

/// min ||z + d gamma||_1 over (n+1)-chains gamma, for a cycle z.
struct L1Result {
  Rational value;
  Chain representative;
  Chain gamma;
  LPProblem problem;
  LPCertificate certificate;
};

/// min ||f + delta eta||_inf over (n-1)-cochains eta, for a cocycle f.
struct LinfResult {
  Rational value;
  Cochain representative;
  Cochain eta;
  LPProblem problem;
  LPCertificate certificate;
};

/// min over lambda of ||values + sum_k lambda_k directions[k]||_inf.
struct LinfMinimum {
  Rational value;
  DenseVector lambda;
  DenseVector minimizer;
  LPProblem problem;
  LPCertificate certificate;
};

LinfMinimum linf_minimize(const DenseVector& values, const std::vector<DenseVector>& directions,
                          PivotRule rule = PivotRule::kBland);

/// Throws PreconditionError when z is not a cycle.
L1Result l1_seminorm(const OrientedComplex& k, const Chain& z, PivotRule rule = PivotRule::kBland);
/// Throws PreconditionError when f is not a cocycle.
LinfResult linf_seminorm(const OrientedComplex& k, const Cochain& f, PivotRule rule = PivotRule::kBland);

enum class DualityStatus { kOk, kDegenerate };

/// The dual program: min ||phi||_inf over cocycles phi with <phi, z> = 1. Its
/// optimum t is the reciprocal of the l1 seminorm of [z]; `phi` attains it.
/// A nullhomologous z makes that program infeasible (status kDegenerate).
struct DualityResult {
  DualityStatus status = DualityStatus::kDegenerate;
  Rational l1;
  Rational dual_optimum;
  /// 1 / dual_optimum, the supremum of 1/||[phi]|| over normalized cocycles.
  Rational sup_value;
  Cochain phi;
  bool equal = false;
  L1Result primal;
  LPProblem dual_problem;
  LPCertificate dual_certificate;
};

DualityResult duality_check(const OrientedComplex& k, const Chain& z, PivotRule rule = PivotRule::kBland);

}  // namespace ellone::seminorm
