#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ellone/linalg.hpp"
#include "ellone/rational.hpp"

namespace ellone::seminorm {

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

/// Bland's rule is the default and never cycles. Dantzig (most negative reduced
/// cost) falls back to Bland after a run of degenerate pivots.
enum class PivotRule { kBland, kDantzig };

/// optimize c.x subject to row_r . x (rel_r) rhs_r, x >= 0.
struct LPProblem {
  Sense sense = Sense::kMinimize;
  DenseVector objective;
  std::vector<SparseVector> rows;
  std::vector<Relation> relations;
  DenseVector rhs;

  explicit LPProblem(std::size_t variables = 0, Sense s = Sense::kMinimize)
      : sense(s), objective(variables) {}

  std::size_t variable_count() const { return objective.size(); }
  std::size_t constraint_count() const { return rows.size(); }
  void add_constraint(SparseVector row, Relation rel, Rational value);
  /// Throws PreconditionError on inconsistent dimensions.
  void validate() const;
};

/// Primal/dual pair. For a minimization the dual satisfies A^T y <= c with
/// y_r >= 0 on >= rows, y_r <= 0 on <= rows; for a maximization the
/// inequalities flip. Only status is meaningful unless optimal.
struct LPCertificate {
  LPStatus status = LPStatus::kInfeasible;
  Rational value;
  DenseVector primal;
  DenseVector dual;
  std::size_t pivots = 0;
};

LPCertificate lp_solve(const LPProblem& problem, PivotRule rule = PivotRule::kBland);

/// Re-checks an optimal certificate exactly: primal feasibility, dual
/// feasibility, equal objectives and complementary slackness. On failure the
/// reason is written to `why` when given.
bool verify_certificate(const LPProblem& problem, const LPCertificate& cert, std::string* why = nullptr);

/// Pivot rule from ELLONE_PIVOT (only "bland" is accepted; unset means Bland).
PivotRule pivot_rule_from_env();

std::string to_string(LPStatus status);
std::string to_string(PivotRule rule);
nlohmann::ordered_json to_json(const LPProblem& problem);
nlohmann::ordered_json to_json(const LPCertificate& cert);

}  // namespace ellone::seminorm
