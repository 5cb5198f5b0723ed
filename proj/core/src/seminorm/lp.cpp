#include "ellone/seminorm/lp.hpp"

#include <cstdlib>
#include <limits>

#include "ellone/error.hpp"

namespace ellone::seminorm {

void LPProblem::add_constraint(SparseVector row, Relation rel, Rational value) {
  rows.push_back(std::move(row));
  relations.push_back(rel);
  rhs.push_back(std::move(value));
}

void LPProblem::validate() const {
  if (rows.size() != relations.size() || rows.size() != rhs.size()) {
    throw PreconditionError("LP rows, relations and right-hand sides differ in number");
  }
  for (const auto& row : rows) {
    if (!row.empty() && row.rbegin()->first >= objective.size()) {
      throw PreconditionError("LP row refers to a variable past the objective");
    }
  }
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kDegenerateRunLimit = 50;

// Dense tableau over [structural | slack | artificial] columns, minimizing.
class Tableau {
 public:
  Tableau(const LPProblem& p, PivotRule rule) : rule_(rule) {
    m_ = p.rows.size();
    n_ = p.variable_count();
    slack_begin_ = n_;
    std::size_t slacks = 0;
    for (Relation r : p.relations) slacks += r != Relation::kEqual;
    art_begin_ = n_ + slacks;
    width_ = art_begin_ + m_;
    a_.assign(m_, DenseVector(width_));
    b_.assign(m_, Rational(0));
    flip_.assign(m_, 1);
    std::size_t next_slack = slack_begin_;
    for (std::size_t r = 0; r < m_; ++r) {
      for (const auto& [j, v] : p.rows[r]) a_[r][j] = v;
      b_[r] = p.rhs[r];
      if (p.relations[r] != Relation::kEqual) {
        a_[r][next_slack++] = p.relations[r] == Relation::kLessEqual ? 1 : -1;
      }
      if (b_[r] < 0) {
        flip_[r] = -1;
        for (auto& v : a_[r]) v = -v;
        b_[r] = -b_[r];
      }
      a_[r][art_begin_ + r] = 1;
    }
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) basis_[r] = art_begin_ + r;
    cost_.assign(width_, Rational(0));
    const Rational sign = p.sense == Sense::kMaximize ? -1 : 1;
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = sign * p.objective[j];
  }

  LPCertificate solve(const LPProblem& p) {
    LPCertificate cert;
    // Phase 1: minimize the sum of artificials.
    DenseVector phase1(width_);
    for (std::size_t r = 0; r < m_; ++r) phase1[art_begin_ + r] = 1;
    load_objective(phase1);
    run(width_);
    if (objective_value_ != 0) {
      cert.status = LPStatus::kInfeasible;
      cert.pivots = pivots_;
      return cert;
    }
    drive_out_artificials();
    load_objective(cost_);
    if (!run(art_begin_)) {
      cert.status = LPStatus::kUnbounded;
      cert.pivots = pivots_;
      return cert;
    }
    cert.status = LPStatus::kOptimal;
    cert.pivots = pivots_;
    cert.primal.assign(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) cert.primal[basis_[r]] = b_[r];
    }
    const Rational sign = p.sense == Sense::kMaximize ? -1 : 1;
    cert.value = sign * objective_value_;
    cert.dual.assign(m_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) cert.dual[r] = sign * flip_[r] * -reduced_[art_begin_ + r];
    return cert;
  }

 private:
  void load_objective(const DenseVector& c) {
    reduced_ = c;
    objective_value_ = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (a_[r][j] != 0) reduced_[j] -= cb * a_[r][j];
      }
      objective_value_ += cb * b_[r];
    }
  }

  std::size_t entering(std::size_t limit, bool bland) const {
    std::size_t best = kNone;
    for (std::size_t j = 0; j < limit; ++j) {
      if (reduced_[j] >= 0) continue;
      if (bland) return j;
      if (best == kNone || reduced_[j] < reduced_[best]) best = j;
    }
    return best;
  }

  std::size_t leaving(std::size_t col) const {
    std::size_t best = kNone;
    Rational best_ratio;
    for (std::size_t r = 0; r < m_; ++r) {
      if (a_[r][col] <= 0) continue;
      Rational ratio = b_[r] / a_[r][col];
      if (best == kNone || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational inv = 1 / a_[row][col];
    for (auto& v : a_[row]) {
      if (v != 0) v *= inv;
    }
    b_[row] *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || a_[r][col] == 0) continue;
      const Rational factor = a_[r][col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (a_[row][j] != 0) a_[r][j] -= factor * a_[row][j];
      }
      b_[r] -= factor * b_[row];
    }
    if (reduced_[col] != 0) {
      const Rational factor = reduced_[col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (a_[row][j] != 0) reduced_[j] -= factor * a_[row][j];
      }
      objective_value_ += factor * b_[row];
    }
    basis_[row] = col;
  }

  // Returns false when unbounded. Columns >= limit never enter.
  bool run(std::size_t limit) {
    std::size_t degenerate_run = 0;
    for (;;) {
      const bool bland = rule_ == PivotRule::kBland || degenerate_run >= kDegenerateRunLimit;
      const std::size_t col = entering(limit, bland);
      if (col == kNone) return true;
      const std::size_t row = leaving(col);
      if (row == kNone) return false;
      degenerate_run = b_[row] == 0 ? degenerate_run + 1 : 0;
      pivot(row, col);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (a_[r][j] != 0) {
          pivot(r, j);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at zero.
    }
  }

  PivotRule rule_;
  std::size_t m_ = 0, n_ = 0, slack_begin_ = 0, art_begin_ = 0, width_ = 0;
  std::vector<DenseVector> a_;
  DenseVector b_;
  std::vector<int> flip_;
  std::vector<std::size_t> basis_;
  DenseVector cost_, reduced_;
  Rational objective_value_;
  std::size_t pivots_ = 0;
};

Rational row_dot(const SparseVector& row, const DenseVector& x) {
  Rational total = 0;
  for (const auto& [j, v] : row) total += v * x[j];
  return total;
}

bool fail(std::string* why, const std::string& reason) {
  if (why) *why = reason;
  return false;
}

}  // namespace

LPCertificate lp_solve(const LPProblem& problem, PivotRule rule) {
  problem.validate();
  Tableau t(problem, rule);
  return t.solve(problem);
}

bool verify_certificate(const LPProblem& p, const LPCertificate& cert, std::string* why) {
  if (cert.status != LPStatus::kOptimal) return fail(why, "certificate is not optimal");
  if (cert.primal.size() != p.variable_count() || cert.dual.size() != p.constraint_count()) {
    return fail(why, "certificate dimensions do not match the problem");
  }
  const bool minimize = p.sense == Sense::kMinimize;
  for (const auto& x : cert.primal) {
    if (x < 0) return fail(why, "negative primal variable");
  }
  Rational dual_value = 0;
  DenseVector aty(p.variable_count());
  for (std::size_t r = 0; r < p.constraint_count(); ++r) {
    const Rational lhs = row_dot(p.rows[r], cert.primal);
    const Rational& y = cert.dual[r];
    switch (p.relations[r]) {
      case Relation::kLessEqual:
        if (lhs > p.rhs[r]) return fail(why, "primal row " + std::to_string(r) + " violated");
        if (minimize ? y > 0 : y < 0) return fail(why, "dual sign wrong on row " + std::to_string(r));
        break;
      case Relation::kGreaterEqual:
        if (lhs < p.rhs[r]) return fail(why, "primal row " + std::to_string(r) + " violated");
        if (minimize ? y < 0 : y > 0) return fail(why, "dual sign wrong on row " + std::to_string(r));
        break;
      case Relation::kEqual:
        if (lhs != p.rhs[r]) return fail(why, "primal row " + std::to_string(r) + " violated");
        break;
    }
    if (y != 0 && lhs != p.rhs[r]) return fail(why, "complementary slackness fails on row " + std::to_string(r));
    dual_value += y * p.rhs[r];
    for (const auto& [j, v] : p.rows[r]) aty[j] += v * y;
  }
  Rational primal_value = 0;
  for (std::size_t j = 0; j < p.variable_count(); ++j) {
    primal_value += p.objective[j] * cert.primal[j];
    const Rational slack = p.objective[j] - aty[j];
    if (minimize ? slack < 0 : slack > 0) return fail(why, "dual constraint " + std::to_string(j) + " violated");
    if (slack != 0 && cert.primal[j] != 0) {
      return fail(why, "complementary slackness fails on variable " + std::to_string(j));
    }
  }
  if (primal_value != cert.value) return fail(why, "primal objective differs from reported value");
  if (dual_value != cert.value) return fail(why, "dual objective differs from reported value");
  return true;
}

PivotRule pivot_rule_from_env() {
  const char* value = std::getenv("ELLONE_PIVOT");
  if (value == nullptr || std::string(value).empty() || std::string(value) == "bland") return PivotRule::kBland;
  throw PreconditionError("ELLONE_PIVOT must be \"bland\"");
}

std::string to_string(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

std::string to_string(PivotRule rule) { return rule == PivotRule::kBland ? "bland" : "dantzig"; }

nlohmann::ordered_json to_json(const LPProblem& p) {
  nlohmann::ordered_json j;
  j["sense"] = p.sense == Sense::kMinimize ? "min" : "max";
  auto& obj = j["objective"] = nlohmann::ordered_json::array();
  for (const auto& c : p.objective) obj.push_back(ellone::to_string(c));
  auto& rows = j["constraints"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < p.constraint_count(); ++r) {
    nlohmann::ordered_json row;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [col, v] : p.rows[r]) coeffs[std::to_string(col)] = ellone::to_string(v);
    row["coeffs"] = std::move(coeffs);
    row["relation"] = p.relations[r] == Relation::kLessEqual ? "<=" : p.relations[r] == Relation::kEqual ? "=" : ">=";
    row["rhs"] = ellone::to_string(p.rhs[r]);
    rows.push_back(std::move(row));
  }
  return j;
}

nlohmann::ordered_json to_json(const LPCertificate& cert) {
  nlohmann::ordered_json j;
  j["status"] = to_string(cert.status);
  if (cert.status == LPStatus::kOptimal) {
    j["value"] = ellone::to_string(cert.value);
    auto& x = j["primal"] = nlohmann::ordered_json::array();
    for (const auto& v : cert.primal) x.push_back(ellone::to_string(v));
    auto& y = j["dual"] = nlohmann::ordered_json::array();
    for (const auto& v : cert.dual) y.push_back(ellone::to_string(v));
  }
  return j;
}

}  // namespace ellone::seminorm
