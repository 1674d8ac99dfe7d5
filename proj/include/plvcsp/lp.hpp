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

// Exact rational linear programming: a dense two-phase primal simplex
// with Bland's rule.
//
// Two entry points are offered. solve_lp() works over free variables in
// Q^d with constraints poly(x) <= 0 and poly(x) = 0, which is how the
// cell machinery phrases its problems. solve_standard_form() is the
// tableau core itself (nonnegative variables, <= and = rows) and is used
// directly where the problem already has that shape.

#pragma once

#include <cstddef>
#include <vector>

#include "plvcsp/model.hpp"
#include "plvcsp/rational.hpp"

namespace plvcsp {

enum class LpStatus { kInfeasible, kUnbounded, kOptimal };

const char* status_name(LpStatus status);

// minimize objective(x) over x in Q^d subject to every constraint.
// Only kLeq and kEq relations are accepted.
struct LpProblem {
  std::size_t dimension = 0;
  std::vector<LinearConstraint> constraints;
  LinearPolynomial objective;
};

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;

  // kOptimal: the optimum and a feasible point attaining it.
  Rational value;
  Point witness;

  // kOptimal: one multiplier per constraint, nonnegative for kLeq rows,
  // with objective + sum_i multipliers[i] * constraints[i].poly identically
  // equal to the constant `value`. This is the weak duality certificate.
  std::vector<Rational> multipliers;

  // kUnbounded: a feasible point and a direction along which every
  // constraint stays satisfied and the objective strictly decreases.
  Point ray_origin;
  Point ray;
};

// Throws UsageError on LT constraints or dimension mismatches.
LpOutcome solve_lp(const LpProblem& problem);

// Maximization by negation. The value and witness refer to the maximum;
// multipliers certify the negated (minimization) problem; kUnbounded means
// the supremum is +inf and `ray` increases the objective.
LpOutcome solve_lp_max(const LpProblem& problem);

// Checks everything LpOutcome promises for kOptimal and kUnbounded.
bool verify_lp_outcome(const LpProblem& problem, const LpOutcome& outcome);

// minimize cost . u + cost_constant subject to rows, u >= 0.
struct StandardFormLp {
  struct Row {
    std::vector<Rational> coefficients;
    Relation rel = Relation::kLeq;  // kLeq or kEq
    Rational rhs;
  };

  std::size_t num_vars = 0;
  std::vector<Row> rows;
  std::vector<Rational> cost;
  Rational cost_constant;
};

struct StandardFormResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> point;  // kOptimal, or the ray origin for kUnbounded
  std::vector<Rational> ray;    // kUnbounded: u >= 0 direction, rows' lhs unchanged for kEq
  // kOptimal: y with cost - A^T y >= 0 componentwise and y_i <= 0 on kLeq
  // rows; value = cost_constant + rhs . y.
  std::vector<Rational> row_duals;
  std::size_t pivots = 0;
};

StandardFormResult solve_standard_form(const StandardFormLp& lp);

}  // namespace plvcsp
