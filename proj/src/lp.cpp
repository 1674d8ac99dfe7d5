// Copyright 2026 The plvcsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plvcsp/lp.hpp"

#include <limits>
#include <optional>

#include "plvcsp/errors.hpp"

namespace plvcsp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau B^{-1} [A | b] together with the reduced cost row of the
// current phase. Column layout: structural variables, one slack per <=
// row, one artificial per row that has no usable slack.
class Tableau {
 public:
  explicit Tableau(const StandardFormLp& lp) : num_vars_(lp.num_vars), rows_(lp.rows.size()) {
    std::size_t num_slacks = 0;
    for (const auto& row : lp.rows) {
      if (row.rel == Relation::kLt) throw UsageError("standard form rows must be <= or =");
      if (row.coefficients.size() != num_vars_) throw UsageError("row length differs from num_vars");
      if (row.rel == Relation::kLeq) ++num_slacks;
    }
    slack_col_.assign(rows_, kNone);
    art_col_.assign(rows_, kNone);
    negated_.assign(rows_, false);

    // Decide which rows need an artificial before laying out columns.
    std::size_t num_art = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& row = lp.rows[i];
      negated_[i] = row.rhs < 0;
      if (row.rel == Relation::kEq || negated_[i]) ++num_art;
    }
    art_start_ = num_vars_ + num_slacks;
    cols_ = art_start_ + num_art;
    cells_.assign(rows_ * cols_, Rational(0));
    rhs_.resize(rows_);
    basis_.assign(rows_, kNone);

    std::size_t next_slack = num_vars_;
    std::size_t next_art = art_start_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& row = lp.rows[i];
      const bool neg = negated_[i];
      for (std::size_t j = 0; j < num_vars_; ++j) {
        if (row.coefficients[j] != 0) at(i, j) = neg ? Rational(-row.coefficients[j]) : row.coefficients[j];
      }
      rhs_[i] = neg ? Rational(-row.rhs) : row.rhs;
      if (row.rel == Relation::kLeq) {
        slack_col_[i] = next_slack++;
        at(i, slack_col_[i]) = neg ? -1 : 1;
        if (!neg) basis_[i] = slack_col_[i];
      }
      if (basis_[i] == kNone) {
        art_col_[i] = next_art++;
        at(i, art_col_[i]) = 1;
        basis_[i] = art_col_[i];
      }
    }
    reduced_.assign(cols_, Rational(0));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_artificial(std::size_t j) const { return j >= art_start_; }
  bool has_artificials() const { return art_start_ < cols_; }
  std::size_t pivots() const { return pivots_; }
  const Rational& objective_value() const { return objective_; }

  Rational& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  // Recomputes reduced costs and the objective for a new cost vector over
  // all columns.
  void set_costs(const std::vector<Rational>& cost) {
    reduced_ = cost;
    objective_ = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      addmul(objective_, cb, rhs_[i]);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(at(i, j)) != 0) submul(reduced_[j], cb, at(i, j));
      }
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    ++pivots_;
    const Rational pv = at(r, col);
    nonzero_.clear();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(at(r, j)) != 0) {
        mpq_div(at(r, j).get_mpq_t(), at(r, j).get_mpq_t(), pv.get_mpq_t());
        nonzero_.push_back(j);
      }
    }
    mpq_div(rhs_[r].get_mpq_t(), rhs_[r].get_mpq_t(), pv.get_mpq_t());
    Rational f;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(at(i, col)) == 0) continue;
      f = at(i, col);
      for (std::size_t j : nonzero_) submul(at(i, j), f, at(r, j));
      submul(rhs_[i], f, rhs_[r]);
    }
    if (sgn(reduced_[col]) != 0) {
      f = reduced_[col];
      for (std::size_t j : nonzero_) submul(reduced_[j], f, at(r, j));
      addmul(objective_, f, rhs_[r]);
    }
    basis_[r] = col;
  }

  enum class Stop { kOptimal, kUnbounded };

  // Bland's rule: lowest-index improving column, ties in the ratio test
  // broken by lowest basic variable index. Artificial columns never enter.
  Stop run(std::size_t& unbounded_col) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < art_start_; ++j) {
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return Stop::kOptimal;

      std::size_t leave = kNone;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(at(i, enter)) <= 0) continue;
        if (leave == kNone) {
          leave = i;
          continue;
        }
        // rhs_i / a_i versus rhs_l / a_l, both denominators positive
        mpq_mul(scratch_.get_mpq_t(), rhs_[i].get_mpq_t(), at(leave, enter).get_mpq_t());
        mpq_mul(scratch2_.get_mpq_t(), rhs_[leave].get_mpq_t(), at(i, enter).get_mpq_t());
        const int c = cmp(scratch_, scratch2_);
        if (c < 0 || (c == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == kNone) {
        unbounded_col = enter;
        return Stop::kUnbounded;
      }
      pivot(leave, enter);
    }
  }

  // Pivots basic artificials (all at level zero) out of the basis where the
  // row still has a structural or slack entry. Rows without one are
  // redundant and keep their artificial, which then never moves.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < art_start_; ++j) {
        if (at(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> primal_point() const {
    std::vector<Rational> u(num_vars_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < num_vars_) u[basis_[i]] = rhs_[i];
    }
    return u;
  }

  std::vector<Rational> ray(std::size_t col) const {
    std::vector<Rational> dir(num_vars_);
    if (col < num_vars_) dir[col] = 1;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < num_vars_ && at(i, col) != 0) dir[basis_[i]] = -at(i, col);
    }
    return dir;
  }

  // Duals of the original (un-negated) rows, read off the reduced costs of
  // each row's slack or artificial column.
  std::vector<Rational> row_duals() const {
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (slack_col_[i] != kNone) {
        y[i] = -reduced_[slack_col_[i]];
      } else {
        y[i] = negated_[i] ? reduced_[art_col_[i]] : Rational(-reduced_[art_col_[i]]);
      }
    }
    return y;
  }

 private:
  // a -= b * c without a heap temporary.
  void submul(Rational& a, const Rational& b, const Rational& c) {
    mpq_mul(scratch_.get_mpq_t(), b.get_mpq_t(), c.get_mpq_t());
    mpq_sub(a.get_mpq_t(), a.get_mpq_t(), scratch_.get_mpq_t());
  }

  void addmul(Rational& a, const Rational& b, const Rational& c) {
    mpq_mul(scratch_.get_mpq_t(), b.get_mpq_t(), c.get_mpq_t());
    mpq_add(a.get_mpq_t(), a.get_mpq_t(), scratch_.get_mpq_t());
  }

  std::size_t num_vars_;
  std::size_t rows_;
  std::size_t cols_ = 0;
  std::size_t art_start_ = 0;
  std::vector<Rational> cells_;
  std::vector<Rational> rhs_;
  std::vector<Rational> reduced_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> slack_col_;
  std::vector<std::size_t> art_col_;
  std::vector<bool> negated_;
  std::vector<std::size_t> nonzero_;
  Rational objective_;
  Rational scratch_;
  Rational scratch2_;
  std::size_t pivots_ = 0;
};

void check_problem(const LpProblem& problem) {
  if (problem.objective.dimension() != problem.dimension) {
    throw UsageError("objective dimension differs from problem dimension");
  }
  for (const auto& c : problem.constraints) {
    if (c.rel == Relation::kLt) throw UsageError("LP constraints must be <= or =");
    if (c.poly.dimension() != problem.dimension) {
      throw UsageError("constraint dimension differs from problem dimension");
    }
  }
}

}  // namespace

const char* status_name(LpStatus status) {
  switch (status) {
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kOptimal:
      return "optimal";
  }
  return "?";
}

StandardFormResult solve_standard_form(const StandardFormLp& lp) {
  if (lp.cost.size() != lp.num_vars) throw UsageError("cost length differs from num_vars");
  Tableau tab(lp);
  StandardFormResult result;
  std::size_t unbounded_col = kNone;

  if (tab.has_artificials()) {
    std::vector<Rational> phase1(tab.cols(), Rational(0));
    for (std::size_t j = 0; j < tab.cols(); ++j) {
      if (tab.is_artificial(j)) phase1[j] = 1;
    }
    tab.set_costs(phase1);
    if (tab.objective_value() != 0) {
      tab.run(unbounded_col);  // bounded below by zero
    }
    if (tab.objective_value() != 0) {
      result.status = LpStatus::kInfeasible;
      result.pivots = tab.pivots();
      return result;
    }
    tab.drive_out_artificials();
  }

  std::vector<Rational> phase2(tab.cols(), Rational(0));
  for (std::size_t j = 0; j < lp.num_vars; ++j) phase2[j] = lp.cost[j];
  tab.set_costs(phase2);
  const auto stop = tab.run(unbounded_col);
  result.point = tab.primal_point();
  result.pivots = tab.pivots();
  if (stop == Tableau::Stop::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    result.ray = tab.ray(unbounded_col);
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = tab.objective_value() + lp.cost_constant;
  result.row_duals = tab.row_duals();
  return result;
}

LpOutcome solve_lp(const LpProblem& problem) {
  check_problem(problem);
  const std::size_t d = problem.dimension;

  // x = x+ - x-, both nonnegative; equalities become two <= rows.
  StandardFormLp lp;
  lp.num_vars = 2 * d;
  lp.cost.resize(2 * d);
  for (std::size_t j = 0; j < d; ++j) {
    lp.cost[j] = problem.objective.coefficients[j];
    lp.cost[d + j] = -problem.objective.coefficients[j];
  }
  lp.cost_constant = problem.objective.constant;

  auto add_row = [&](const LinearPolynomial& p, bool negate) {
    StandardFormLp::Row row;
    row.coefficients.resize(2 * d);
    for (std::size_t j = 0; j < d; ++j) {
      const Rational a = negate ? Rational(-p.coefficients[j]) : p.coefficients[j];
      row.coefficients[j] = a;
      row.coefficients[d + j] = -a;
    }
    row.rel = Relation::kLeq;
    row.rhs = negate ? p.constant : Rational(-p.constant);
    lp.rows.push_back(std::move(row));
  };
  std::vector<std::size_t> first_row(problem.constraints.size());
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& c = problem.constraints[i];
    first_row[i] = lp.rows.size();
    add_row(c.poly, false);
    if (c.rel == Relation::kEq) add_row(c.poly, true);
  }

  const StandardFormResult sf = solve_standard_form(lp);
  LpOutcome out;
  out.status = sf.status;
  if (sf.status == LpStatus::kInfeasible) return out;

  auto to_free = [d](const std::vector<Rational>& u) {
    Point x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = u[j] - u[d + j];
    return x;
  };
  if (sf.status == LpStatus::kUnbounded) {
    out.ray_origin = to_free(sf.point);
    out.ray = to_free(sf.ray);
    return out;
  }
  out.value = sf.value;
  out.witness = to_free(sf.point);
  out.multipliers.resize(problem.constraints.size());
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    out.multipliers[i] = -sf.row_duals[first_row[i]];
    if (problem.constraints[i].rel == Relation::kEq) {
      out.multipliers[i] += sf.row_duals[first_row[i] + 1];
    }
  }
  return out;
}

LpOutcome solve_lp_max(const LpProblem& problem) {
  LpProblem negated = problem;
  negated.objective = -problem.objective;
  LpOutcome out = solve_lp(negated);
  if (out.status == LpStatus::kOptimal) out.value = -out.value;
  return out;
}

bool verify_lp_outcome(const LpProblem& problem, const LpOutcome& outcome) {
  if (outcome.status == LpStatus::kInfeasible) return true;
  const auto feasible_at = [&](const Point& x) {
    if (x.size() != problem.dimension) return false;
    for (const auto& c : problem.constraints) {
      if (!holds(c, x)) return false;
    }
    return true;
  };
  if (outcome.status == LpStatus::kUnbounded) {
    if (!feasible_at(outcome.ray_origin) || outcome.ray.size() != problem.dimension) return false;
    auto slope = [&](const LinearPolynomial& p) {
      Rational s;
      for (std::size_t j = 0; j < problem.dimension; ++j) s += p.coefficients[j] * outcome.ray[j];
      return s;
    };
    for (const auto& c : problem.constraints) {
      const Rational s = slope(c.poly);
      if (c.rel == Relation::kEq ? s != 0 : s > 0) return false;
    }
    return slope(problem.objective) < 0;
  }
  if (!feasible_at(outcome.witness)) return false;
  if (eval_poly(problem.objective, outcome.witness) != outcome.value) return false;
  if (outcome.multipliers.size() != problem.constraints.size()) return false;
  LinearPolynomial combo = problem.objective;
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& c = problem.constraints[i];
    if (c.rel == Relation::kLeq && outcome.multipliers[i] < 0) return false;
    combo += outcome.multipliers[i] * c.poly;
  }
  return combo.is_constant() && combo.constant == outcome.value;
}

}  // namespace plvcsp
