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

#include "plvcsp/solver.hpp"

#include <algorithm>
#include <exception>

#include "plvcsp/errors.hpp"
#include "plvcsp/lp.hpp"
#include "plvcsp/strict.hpp"

namespace plvcsp {
namespace {

std::atomic<std::uint64_t>* containment_counter(CallCounters* c) {
  return c ? &c->containment_feasibility : nullptr;
}

std::atomic<std::uint64_t>* bound_counter(CallCounters* c) { return c ? &c->bound_lps : nullptr; }

// Per-cell outcome of the solve kernel; bounds are absent for cells on
// which some term is +inf.
using CellOutcome = std::optional<CellBounds>;

CellOutcome process_cell(const Instance& inst, const Cell& cell, CallCounters* counters) {
  CellObjective restricted = restrict_objective_to_cell(inst, cell, counters);
  if (!restricted.expression) return std::nullopt;
  return cell_bounds(cell, *restricted.expression, counters);
}

std::vector<CellOutcome> process_cells_serial(const Instance& inst, const std::vector<Cell>& cells,
                                              CallCounters* counters) {
  std::vector<CellOutcome> out;
  out.reserve(cells.size());
  for (const Cell& cell : cells) out.push_back(process_cell(inst, cell, counters));
  return out;
}

std::vector<CellOutcome> process_cells_parallel(const Instance& inst, const std::vector<Cell>& cells,
                                                CallCounters* counters) {
  std::vector<CellOutcome> out(cells.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = process_cell(inst, cells[i], counters);
    } catch (...) {
#pragma omp critical(plvcsp_solve_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct Evaluation {
  Arrangement arrangement;
  std::vector<CellOutcome> outcomes;
};

Evaluation evaluate(const Instance& inst, const SolveOptions& options) {
  validate_instance(inst);
  Evaluation ev;
  ev.arrangement = build_arrangement(inst, options.parallel, options.counters);
  ev.outcomes = options.parallel ? process_cells_parallel(inst, ev.arrangement.cells, options.counters)
                                 : process_cells_serial(inst, ev.arrangement.cells, options.counters);
  return ev;
}

SolveResult aggregate(const std::vector<CellOutcome>& outcomes) {
  ResultAccumulator acc;
  for (const auto& o : outcomes) {
    if (o) acc.add(o->infimum, o->supremum);
  }
  return acc.result();
}

}  // namespace

namespace {

// The cell rows for the hyperplanes a lifted guard mentions, plus the
// guard. Every guard polynomial has constant sign on the (non-empty) cell,
// so this system is feasible iff cell_system(cell) plus the guard is; the
// full system is used when some guard row is not a cell hyperplane.
MixedSystem containment_system(const Cell& cell, const std::vector<LinearConstraint>& guard) {
  const auto& polys = *cell.polys;
  MixedSystem sys(cell.dimension);
  std::vector<bool> used(polys.size(), false);
  for (const LinearConstraint& c : guard) {
    sys.add(c);
    if (c.poly.is_constant()) continue;
    const LinearPolynomial key = canonicalize(c.poly).poly;
    const auto it = std::find(polys.begin(), polys.end(), key);
    if (it == polys.end()) {
      MixedSystem full = cell_system(cell);
      full.add_all(guard);
      return full;
    }
    used[static_cast<std::size_t>(it - polys.begin())] = true;
  }
  for (std::size_t j = 0; j < polys.size(); ++j) {
    if (!used[j]) continue;
    switch (cell.signs[j]) {
      case Sign::kNeg:
        sys.strict.push_back(polys[j]);
        break;
      case Sign::kZero:
        sys.weak.push_back(polys[j]);
        sys.weak.push_back(-polys[j]);
        break;
      case Sign::kPos:
        sys.strict.push_back(-polys[j]);
        break;
    }
  }
  return sys;
}

}  // namespace

std::optional<LinearPolynomial> restrict_term_to_cell(const Term& term,
                                                      std::span<const PLCostFunction> functions,
                                                      const Cell& cell, CallCounters* counters) {
  if (term.function_index >= functions.size()) throw UsageError("term refers to a missing function");
  const PLCostFunction& f = functions[term.function_index];
  const std::size_t d = cell.dimension;

  std::optional<LinearPolynomial> hit;
  std::vector<LinearConstraint> lifted;
  for (const Piece& piece : f.pieces) {
    lifted.clear();
    for (const LinearConstraint& c : piece.guard) lifted.push_back(lift_constraint(c, term.scope, d));
    bump(containment_counter(counters));
    if (!feasible(containment_system(cell, lifted))) continue;
    LinearPolynomial value = lift_poly(piece.value, term.scope, d);
    if (hit && *hit != value) {
      throw InvalidInstanceError("overlapping pieces with different values share cell (" +
                                 cell.signs_string() + ")");
    }
    hit = std::move(value);
  }
  return hit;
}

CellObjective restrict_objective_to_cell(const Instance& inst, const Cell& cell, CallCounters* counters) {
  CellObjective out{cell, LinearPolynomial(inst.dimension)};
  for (const Term& term : inst.terms) {
    auto g = restrict_term_to_cell(term, inst.functions, cell, counters);
    if (!g) {
      out.expression.reset();
      return out;
    }
    *out.expression += *g;
  }
  return out;
}

CellBounds cell_bounds(const Cell& cell, const LinearPolynomial& obj, CallCounters* counters) {
  LpProblem lp;
  lp.dimension = cell.dimension;
  lp.constraints = closure_system(cell);
  lp.objective = obj;

  CellBounds bounds;
  bump(bound_counter(counters));
  const LpOutcome low = solve_lp(lp);
  if (low.status == LpStatus::kInfeasible) throw InternalError("closure of a non-empty cell is empty");
  bounds.infimum = low.status == LpStatus::kUnbounded ? ExtRational::minus_infinity()
                                                      : ExtRational(low.value);

  bump(bound_counter(counters));
  const LpOutcome high = solve_lp_max(lp);
  if (high.status == LpStatus::kInfeasible) throw InternalError("closure of a non-empty cell is empty");
  bounds.supremum = high.status == LpStatus::kUnbounded ? ExtRational::plus_infinity()
                                                        : ExtRational(high.value);
  return bounds;
}

bool ResultAccumulator::add(const ExtRational& infimum, const ExtRational& supremum) {
  const bool constant = infimum.is_finite() && infimum == supremum;
  if (infimum < best_) {
    best_ = infimum;
    attained_ = constant;
    return true;
  }
  if (infimum == best_ && constant) attained_ = true;
  return false;
}

SolveResult solve(const Instance& inst, const SolveOptions& options) {
  return aggregate(evaluate(inst, options).outcomes);
}

WitnessedResult solve_with_witness(const Instance& inst, const SolveOptions& options) {
  const Evaluation ev = evaluate(inst, options);
  WitnessedResult out;
  out.result = aggregate(ev.outcomes);
  if (!out.result.attained) return out;

  for (std::size_t i = 0; i < ev.outcomes.size(); ++i) {
    const auto& o = ev.outcomes[i];
    if (!o || o->infimum != out.result.value || o->supremum != out.result.value) continue;
    auto point = feasible_point(cell_system(ev.arrangement.cells[i]));
    if (!point) throw InternalError("certified cell has no interior point");
    if (eval_objective(inst, *point) != out.result.value) {
      throw InternalError("witness does not reproduce the optimal value");
    }
    out.witness = std::move(point);
    return out;
  }
  throw InternalError("attained value without a constant cell");
}

SolveResult solve_naive(const Instance& inst) {
  validate_instance(inst);
  const std::size_t d = inst.dimension;
  const std::vector<LinearPolynomial> polys = extract_polynomials(inst);
  const std::size_t k = polys.size();
  if (k > kNaivePolynomialCap) {
    throw UsageError("naive solver refuses " + std::to_string(k) + " hyperplanes (cap " +
                     std::to_string(kNaivePolynomialCap) + ")");
  }

  // Each lifted guard constraint is either a constant truth value or
  // (orientation, index into polys, relation).
  struct GuardAtom {
    bool is_constant = false;
    bool constant_truth = false;
    int orientation = 1;
    std::size_t index = 0;
    Relation rel = Relation::kLeq;
  };
  struct LiftedPiece {
    std::vector<GuardAtom> atoms;
    LinearPolynomial value;
  };
  std::vector<std::vector<LiftedPiece>> lifted(inst.terms.size());
  for (std::size_t t = 0; t < inst.terms.size(); ++t) {
    const Term& term = inst.terms[t];
    for (const Piece& piece : inst.functions[term.function_index].pieces) {
      LiftedPiece lp{{}, lift_poly(piece.value, term.scope, d)};
      for (const LinearConstraint& c : piece.guard) {
        const LinearPolynomial q = lift_poly(c.poly, term.scope, d);
        GuardAtom atom;
        atom.rel = c.rel;
        if (q.is_constant()) {
          atom.is_constant = true;
          atom.constant_truth = holds(c.rel, q.constant);
        } else {
          const CanonicalForm cf = canonicalize(q);
          atom.orientation = cf.orientation;
          atom.index = static_cast<std::size_t>(std::find(polys.begin(), polys.end(), cf.poly) - polys.begin());
          if (atom.index == k) throw InternalError("guard hyperplane missing from the polynomial list");
        }
        lp.atoms.push_back(atom);
      }
      lifted[t].push_back(std::move(lp));
    }
  }

  ExtRational best = ExtRational::plus_infinity();
  bool attained = false;
  std::vector<int> signs(k, -1);
  for (;;) {
    MixedSystem sys(d);
    std::vector<LinearConstraint> closure;
    for (std::size_t j = 0; j < k; ++j) {
      const LinearPolynomial& p = polys[j];
      if (signs[j] < 0) {
        sys.strict.push_back(p);
        closure.push_back({p, Relation::kLeq});
      } else if (signs[j] == 0) {
        sys.weak.push_back(p);
        sys.weak.push_back(-p);
        closure.push_back({p, Relation::kEq});
      } else {
        sys.strict.push_back(-p);
        closure.push_back({-p, Relation::kLeq});
      }
    }

    if (feasible_oracle(sys)) {
      LinearPolynomial obj(d);
      bool finite = true;
      for (std::size_t t = 0; t < lifted.size() && finite; ++t) {
        const LinearPolynomial* value = nullptr;
        for (const LiftedPiece& piece : lifted[t]) {
          const bool inside = std::all_of(piece.atoms.begin(), piece.atoms.end(), [&](const GuardAtom& a) {
            if (a.is_constant) return a.constant_truth;
            return holds(a.rel, Rational(a.orientation * signs[a.index]));
          });
          if (!inside) continue;
          if (value && *value != piece.value) throw InvalidInstanceError("overlapping pieces disagree");
          value = &piece.value;
        }
        if (value) {
          obj += *value;
        } else {
          finite = false;
        }
      }
      if (finite) {
        LpProblem lp{d, closure, obj};
        const LpOutcome low = solve_lp(lp);
        const LpOutcome high = solve_lp_max(lp);
        if (low.status == LpStatus::kInfeasible || high.status == LpStatus::kInfeasible) {
          throw InternalError("naive solver: empty closure of a feasible sign vector");
        }
        const ExtRational m = low.status == LpStatus::kUnbounded ? ExtRational::minus_infinity()
                                                                 : ExtRational(low.value);
        const ExtRational big_m = high.status == LpStatus::kUnbounded ? ExtRational::plus_infinity()
                                                                      : ExtRational(high.value);
        const bool constant = m.is_finite() && m == big_m;
        if (m < best) {
          best = m;
          attained = constant;
        } else if (m == best && constant) {
          attained = true;
        }
      }
    }

    // Next sign vector in base 3.
    std::size_t j = 0;
    while (j < k && signs[j] == 1) signs[j++] = -1;
    if (j == k) break;
    ++signs[j];
  }
  return {best, attained};
}

}  // namespace plvcsp
