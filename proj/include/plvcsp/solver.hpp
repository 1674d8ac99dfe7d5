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

// Exact infimum and attainment for sums of piecewise-linear cost functions.
//
// solve() decomposes Q^d into the cells of the guard arrangement. On each
// cell every term is either +inf or a single affine function, so the
// objective restricted to the cell is affine; its infimum m and supremum M
// over the cell closure come from two LPs. A cell attains its infimum iff
// m = M, because every cell other than a point is relatively open.
//
// solve_naive() reaches the same answer through exhaustive sign vectors,
// the slack feasibility test and direct sign lookup, sharing none of the
// enumeration or Motzkin code with solve().

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plvcsp/arrangement.hpp"
#include "plvcsp/model.hpp"
#include "plvcsp/stats.hpp"

namespace plvcsp {

struct SolveOptions {
  bool parallel = true;  // OpenMP kernels; false runs the serial reference path
  CallCounters* counters = nullptr;
};

// Affine value of a term on a cell, or nullopt for +inf. Throws
// InvalidInstanceError when two pieces containing the cell disagree.
std::optional<LinearPolynomial> restrict_term_to_cell(const Term& term,
                                                      std::span<const PLCostFunction> functions,
                                                      const Cell& cell,
                                                      CallCounters* counters = nullptr);

struct CellObjective {
  Cell cell;
  std::optional<LinearPolynomial> expression;  // nullopt if some term is +inf
};

// Stops at the first +inf term.
CellObjective restrict_objective_to_cell(const Instance& inst, const Cell& cell,
                                         CallCounters* counters = nullptr);

struct CellBounds {
  ExtRational infimum;
  ExtRational supremum;
};

// Infimum and supremum of obj over the closure of a non-empty cell.
CellBounds cell_bounds(const Cell& cell, const LinearPolynomial& obj, CallCounters* counters = nullptr);

// Folds per-cell (m, M) pairs into the global (value, attained). The
// result does not depend on the order of add() calls.
class ResultAccumulator {
 public:
  // Returns true when this pair set a new best value.
  bool add(const ExtRational& infimum, const ExtRational& supremum);
  SolveResult result() const { return {best_, attained_}; }

 private:
  ExtRational best_ = ExtRational::plus_infinity();
  bool attained_ = false;
};

SolveResult solve(const Instance& inst, const SolveOptions& options = {});

struct WitnessedResult {
  SolveResult result;
  std::optional<Point> witness;  // set iff result.attained
};

// As solve(); an attained value comes with a point achieving it, drawn from
// the interior of a cell on which the objective is constant.
WitnessedResult solve_with_witness(const Instance& inst, const SolveOptions& options = {});

inline constexpr std::size_t kNaivePolynomialCap = 12;

// Throws UsageError when the instance has more than kNaivePolynomialCap
// distinct guard hyperplanes.
SolveResult solve_naive(const Instance& inst);

}  // namespace plvcsp
