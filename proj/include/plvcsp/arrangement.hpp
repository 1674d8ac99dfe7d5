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

// Hyperplane arrangements induced by the guard polynomials of an instance.
//
// Cells are sign vectors over the canonical polynomial list, grown one
// polynomial at a time: every live partial cell is extended by p < 0,
// p = 0 and p > 0, and each extension is kept only if it is non-empty.
// The output is ordered lexicographically with - < 0 < +, which is the
// depth-first order of that branching tree.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "plvcsp/model.hpp"
#include "plvcsp/stats.hpp"
#include "plvcsp/strict.hpp"

namespace plvcsp {

using PolynomialList = std::shared_ptr<const std::vector<LinearPolynomial>>;

struct Arrangement {
  std::size_t dimension = 0;
  PolynomialList polys;
  std::vector<Cell> cells;
};

// Every guard polynomial of every term, lifted through the term's scope,
// canonicalized and deduplicated in first-occurrence order. Constant
// polynomials are skipped.
std::vector<LinearPolynomial> extract_polynomials(const Instance& inst);

// sum_{i=0}^{d} 2^i C(k, i), the maximal number of cells cut out by k
// hyperplanes in Q^d. Throws UsageError on 64-bit overflow.
std::uint64_t tau(std::uint64_t d, std::uint64_t k);

// OpenMP kernel. Partial cells of one level are extended in parallel and
// the children are concatenated in parent order, so the result matches
// enumerate_cells_serial() exactly.
std::vector<Cell> enumerate_cells(std::size_t dimension, PolynomialList polys,
                                  CallCounters* counters = nullptr);

// Reference implementation: plain recursive depth-first search.
std::vector<Cell> enumerate_cells_serial(std::size_t dimension, PolynomialList polys,
                                         CallCounters* counters = nullptr);

Arrangement build_arrangement(const Instance& inst, bool parallel = true,
                              CallCounters* counters = nullptr);

// p < 0 for -, p <= 0 and -p <= 0 for 0, -p < 0 for +.
MixedSystem cell_system(const Cell& cell);

// The topological closure of a non-empty cell: p <= 0, p = 0, -p <= 0.
std::vector<LinearConstraint> closure_system(const Cell& cell);

// Sign of every polynomial at x.
std::vector<Sign> sign_vector(std::span<const LinearPolynomial> polys, std::span<const Rational> x);

}  // namespace plvcsp
