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

// Domain model for valued constraint satisfaction with piecewise-linear
// cost functions: affine polynomials, linear constraints, cost functions
// made of polyhedral pieces, instances, and sign-vector cells.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plvcsp/rational.hpp"

namespace plvcsp {

// a_0 + a_1 x_1 + ... + a_d x_d. The dimension is the number of
// coefficients.
struct LinearPolynomial {
  Rational constant;
  std::vector<Rational> coefficients;

  LinearPolynomial() = default;
  explicit LinearPolynomial(std::size_t dimension) : coefficients(dimension) {}
  LinearPolynomial(Rational c, std::vector<Rational> coeffs)
      : constant(std::move(c)), coefficients(std::move(coeffs)) {}

  // The coordinate function x_index in `dimension` variables.
  static LinearPolynomial variable(std::size_t dimension, std::size_t index);
  static LinearPolynomial constant_poly(std::size_t dimension, Rational value);

  std::size_t dimension() const { return coefficients.size(); }
  bool is_constant() const;
  bool is_zero() const { return constant == 0 && is_constant(); }

  LinearPolynomial operator-() const;
  LinearPolynomial& operator+=(const LinearPolynomial& other);
  LinearPolynomial& operator-=(const LinearPolynomial& other);
  LinearPolynomial& operator*=(const Rational& scale);

  friend LinearPolynomial operator+(LinearPolynomial a, const LinearPolynomial& b) { return a += b; }
  friend LinearPolynomial operator-(LinearPolynomial a, const LinearPolynomial& b) { return a -= b; }
  friend LinearPolynomial operator*(LinearPolynomial a, const Rational& s) { return a *= s; }
  friend LinearPolynomial operator*(const Rational& s, LinearPolynomial a) { return a *= s; }
  friend bool operator==(const LinearPolynomial& a, const LinearPolynomial& b) {
    return a.constant == b.constant && a.coefficients == b.coefficients;
  }

  std::string to_string() const;
};

enum class Relation { kLeq, kLt, kEq };

// "<=", "<" or "=".
const char* relation_token(Relation rel);

// poly(x) rel 0.
struct LinearConstraint {
  LinearPolynomial poly;
  Relation rel = Relation::kLeq;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

// A polyhedral piece: on the set cut out by `guard` the function equals
// `value`. An empty guard is the whole space.
struct Piece {
  std::vector<LinearConstraint> guard;
  LinearPolynomial value;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Pieces are pairwise disjoint; the function is +inf off their union.
struct PLCostFunction {
  std::size_t arity = 0;
  std::vector<Piece> pieces;

  friend bool operator==(const PLCostFunction&, const PLCostFunction&) = default;
};

// f_{function_index}(x_{scope[0]}, ..., x_{scope[r-1]}).
struct Term {
  std::size_t function_index = 0;
  std::vector<std::size_t> scope;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Instance {
  std::size_t dimension = 0;
  std::vector<PLCostFunction> functions;
  std::vector<Term> terms;

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class Sign { kNeg, kZero, kPos };

char sign_char(Sign s);
Sign sign_of(const Rational& value);
Sign flip(Sign s);

// The relatively open set { x : sign(polys[j](x)) = signs[j] for all j }.
// A Cell may describe a prefix of the polynomial list while an arrangement
// is being built; a finished cell has one sign per polynomial.
struct Cell {
  std::size_t dimension = 0;
  std::shared_ptr<const std::vector<LinearPolynomial>> polys;
  std::vector<Sign> signs;

  std::string signs_string() const;

  friend bool operator==(const Cell& a, const Cell& b) {
    if (a.dimension != b.dimension || a.signs != b.signs) return false;
    return a.polys == b.polys || (a.polys && b.polys && *a.polys == *b.polys);
  }
};

struct SolveResult {
  ExtRational value = ExtRational::plus_infinity();
  bool attained = false;

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

// Throws UsageError if x.size() != p.dimension().
Rational eval_poly(const LinearPolynomial& p, std::span<const Rational> x);

bool holds(const LinearConstraint& c, std::span<const Rational> x);
bool holds(Relation rel, const Rational& lhs);

// Value of f at x; +inf when no piece covers x. Throws InvalidInstanceError
// when two covering pieces disagree.
ExtRational eval_function(const PLCostFunction& f, std::span<const Rational> x);

// Sum of all terms at x; +inf absorbs.
ExtRational eval_objective(const Instance& inst, std::span<const Rational> x);

// q(x) = p(x_{scope[0]}, ..., x_{scope[r-1]}) as a polynomial in d
// variables. Repeated scope entries add their coefficients.
LinearPolynomial lift_poly(const LinearPolynomial& p, std::span<const std::size_t> scope,
                           std::size_t d);
LinearConstraint lift_constraint(const LinearConstraint& c, std::span<const std::size_t> scope,
                                 std::size_t d);

struct CanonicalForm {
  LinearPolynomial poly;
  int orientation = 1;  // p = orientation * s * poly for some s > 0
};

// Primitive integer form with the first nonzero of (a_1, ..., a_d, a_0)
// positive. Throws UsageError on constant input.
CanonicalForm canonicalize(const LinearPolynomial& p);

// Checks dimensions, arities and indices. Throws ValidationError.
void validate_instance(const Instance& inst);

}  // namespace plvcsp
