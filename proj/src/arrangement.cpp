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

#include "plvcsp/arrangement.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <optional>

#include "plvcsp/errors.hpp"

namespace plvcsp {
namespace {

constexpr std::array<Sign, 3> kBranchOrder = {Sign::kNeg, Sign::kZero, Sign::kPos};

void add_sign_rows(MixedSystem& sys, const LinearPolynomial& p, Sign s) {
  switch (s) {
    case Sign::kNeg:
      sys.strict.push_back(p);
      break;
    case Sign::kZero:
      sys.weak.push_back(p);
      sys.weak.push_back(-p);
      break;
    case Sign::kPos:
      sys.strict.push_back(-p);
      break;
  }
}

void check_polys(std::size_t dimension, const PolynomialList& polys) {
  if (!polys) throw UsageError("null polynomial list");
  for (const auto& p : *polys) {
    if (p.dimension() != dimension) throw UsageError("arrangement polynomial has wrong dimension");
    if (p.is_constant()) throw UsageError("constant polynomial in an arrangement");
  }
}

struct Partial {
  std::vector<Sign> signs;
  MixedSystem sys;
};

std::optional<Partial> extend(const Partial& parent, const LinearPolynomial& p, Sign s,
                              CallCounters* counters) {
  Partial child{parent.signs, parent.sys};
  child.signs.push_back(s);
  add_sign_rows(child.sys, p, s);
  bump(counters ? &counters->enumeration_feasibility : nullptr);
  if (!feasible(child.sys)) return std::nullopt;
  return child;
}

void dfs(const Partial& node, std::size_t depth, const PolynomialList& polys,
         CallCounters* counters, std::vector<Cell>& out) {
  if (depth == polys->size()) {
    out.push_back(Cell{node.sys.dimension, polys, node.signs});
    return;
  }
  for (Sign s : kBranchOrder) {
    if (auto child = extend(node, (*polys)[depth], s, counters)) {
      dfs(*child, depth + 1, polys, counters, out);
    }
  }
}

}  // namespace

std::vector<LinearPolynomial> extract_polynomials(const Instance& inst) {
  std::vector<LinearPolynomial> out;
  for (const Term& term : inst.terms) {
    const PLCostFunction& f = inst.functions.at(term.function_index);
    for (const Piece& piece : f.pieces) {
      for (const LinearConstraint& c : piece.guard) {
        LinearPolynomial lifted = lift_poly(c.poly, term.scope, inst.dimension);
        if (lifted.is_constant()) continue;
        LinearPolynomial canon = canonicalize(lifted).poly;
        if (std::find(out.begin(), out.end(), canon) == out.end()) out.push_back(std::move(canon));
      }
    }
  }
  return out;
}

std::uint64_t tau(std::uint64_t d, std::uint64_t k) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(k, i)
  std::uint64_t pow2 = 1;   // 2^i
  for (std::uint64_t i = 0; i <= d && i <= k; ++i) {
    if (i > 0) {
      // C(k, i) = C(k, i-1) * (k - i + 1) / i, exact at each step.
      std::uint64_t num = 0;
      if (__builtin_mul_overflow(binom, k - i + 1, &num)) throw UsageError("tau overflow");
      binom = num / i;
      if (__builtin_mul_overflow(pow2, std::uint64_t{2}, &pow2)) throw UsageError("tau overflow");
    }
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(pow2, binom, &term) || __builtin_add_overflow(total, term, &total)) {
      throw UsageError("tau overflow");
    }
  }
  return total;
}

std::vector<Cell> enumerate_cells_serial(std::size_t dimension, PolynomialList polys,
                                         CallCounters* counters) {
  check_polys(dimension, polys);
  std::vector<Cell> out;
  dfs(Partial{{}, MixedSystem(dimension)}, 0, polys, counters, out);
  if (counters) counters->cells += out.size();
  return out;
}

std::vector<Cell> enumerate_cells(std::size_t dimension, PolynomialList polys, CallCounters* counters) {
  check_polys(dimension, polys);
  std::vector<Partial> live;
  live.push_back(Partial{{}, MixedSystem(dimension)});

  for (const LinearPolynomial& p : *polys) {
    const auto n = static_cast<std::ptrdiff_t>(live.size());
    std::vector<std::array<std::optional<Partial>, 3>> children(live.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        for (std::size_t b = 0; b < kBranchOrder.size(); ++b) {
          children[i][b] = extend(live[i], p, kBranchOrder[b], counters);
        }
      } catch (...) {
#pragma omp critical(plvcsp_enumerate_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Partial> next;
    next.reserve(live.size() * 2);
    for (auto& triple : children) {
      for (auto& child : triple) {
        if (child) next.push_back(std::move(*child));
      }
    }
    live = std::move(next);
  }

  std::vector<Cell> out;
  out.reserve(live.size());
  for (auto& partial : live) out.push_back(Cell{dimension, polys, std::move(partial.signs)});
  if (counters) counters->cells += out.size();
  return out;
}

Arrangement build_arrangement(const Instance& inst, bool parallel, CallCounters* counters) {
  Arrangement arr;
  arr.dimension = inst.dimension;
  arr.polys = std::make_shared<const std::vector<LinearPolynomial>>(extract_polynomials(inst));
  arr.cells = parallel ? enumerate_cells(inst.dimension, arr.polys, counters)
                       : enumerate_cells_serial(inst.dimension, arr.polys, counters);
  return arr;
}

MixedSystem cell_system(const Cell& cell) {
  MixedSystem sys(cell.dimension);
  for (std::size_t j = 0; j < cell.signs.size(); ++j) add_sign_rows(sys, (*cell.polys)[j], cell.signs[j]);
  return sys;
}

std::vector<LinearConstraint> closure_system(const Cell& cell) {
  std::vector<LinearConstraint> out;
  out.reserve(cell.signs.size());
  for (std::size_t j = 0; j < cell.signs.size(); ++j) {
    const LinearPolynomial& p = (*cell.polys)[j];
    switch (cell.signs[j]) {
      case Sign::kNeg:
        out.push_back({p, Relation::kLeq});
        break;
      case Sign::kZero:
        out.push_back({p, Relation::kEq});
        break;
      case Sign::kPos:
        out.push_back({-p, Relation::kLeq});
        break;
    }
  }
  return out;
}

std::vector<Sign> sign_vector(std::span<const LinearPolynomial> polys, std::span<const Rational> x) {
  std::vector<Sign> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(sign_of(eval_poly(p, x)));
  return out;
}

}  // namespace plvcsp
