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

#include "plvcsp/model.hpp"

#include <sstream>

#include "plvcsp/errors.hpp"

namespace plvcsp {

LinearPolynomial LinearPolynomial::variable(std::size_t dimension, std::size_t index) {
  if (index >= dimension) throw UsageError("variable index out of range");
  LinearPolynomial p(dimension);
  p.coefficients[index] = 1;
  return p;
}

LinearPolynomial LinearPolynomial::constant_poly(std::size_t dimension, Rational value) {
  LinearPolynomial p(dimension);
  p.constant = std::move(value);
  return p;
}

bool LinearPolynomial::is_constant() const {
  for (const auto& a : coefficients) {
    if (a != 0) return false;
  }
  return true;
}

LinearPolynomial LinearPolynomial::operator-() const {
  LinearPolynomial r = *this;
  r.constant = -r.constant;
  for (auto& a : r.coefficients) a = -a;
  return r;
}

LinearPolynomial& LinearPolynomial::operator+=(const LinearPolynomial& other) {
  if (other.dimension() != dimension()) throw UsageError("polynomial dimension mismatch");
  constant += other.constant;
  for (std::size_t j = 0; j < coefficients.size(); ++j) coefficients[j] += other.coefficients[j];
  return *this;
}

LinearPolynomial& LinearPolynomial::operator-=(const LinearPolynomial& other) {
  if (other.dimension() != dimension()) throw UsageError("polynomial dimension mismatch");
  constant -= other.constant;
  for (std::size_t j = 0; j < coefficients.size(); ++j) coefficients[j] -= other.coefficients[j];
  return *this;
}

LinearPolynomial& LinearPolynomial::operator*=(const Rational& scale) {
  constant *= scale;
  for (auto& a : coefficients) a *= scale;
  return *this;
}

std::string LinearPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& a, const std::string& var) {
    if (a == 0) return;
    const bool neg = a < 0;
    const Rational mag = neg ? Rational(-a) : a;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (var.empty() || mag != 1) os << plvcsp::to_string(mag);
    if (!var.empty() && mag != 1) os << "*";
    os << var;
    first = false;
  };
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    emit(coefficients[j], "x" + std::to_string(j));
  }
  emit(constant, "");
  if (first) os << "0";
  return os.str();
}

const char* relation_token(Relation rel) {
  switch (rel) {
    case Relation::kLeq:
      return "<=";
    case Relation::kLt:
      return "<";
    case Relation::kEq:
      return "=";
  }
  return "?";
}

char sign_char(Sign s) {
  switch (s) {
    case Sign::kNeg:
      return '-';
    case Sign::kZero:
      return '0';
    case Sign::kPos:
      return '+';
  }
  return '?';
}

Sign sign_of(const Rational& value) {
  const int s = sgn(value);
  return s < 0 ? Sign::kNeg : (s == 0 ? Sign::kZero : Sign::kPos);
}

Sign flip(Sign s) {
  if (s == Sign::kNeg) return Sign::kPos;
  if (s == Sign::kPos) return Sign::kNeg;
  return s;
}

std::string Cell::signs_string() const {
  std::string s;
  s.reserve(signs.size());
  for (Sign g : signs) s.push_back(sign_char(g));
  return s;
}

Rational eval_poly(const LinearPolynomial& p, std::span<const Rational> x) {
  if (x.size() != p.dimension()) {
    throw UsageError("point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                     std::to_string(p.dimension()));
  }
  Rational v = p.constant;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (p.coefficients[j] != 0) v += p.coefficients[j] * x[j];
  }
  return v;
}

bool holds(Relation rel, const Rational& lhs) {
  switch (rel) {
    case Relation::kLeq:
      return lhs <= 0;
    case Relation::kLt:
      return lhs < 0;
    case Relation::kEq:
      return lhs == 0;
  }
  return false;
}

bool holds(const LinearConstraint& c, std::span<const Rational> x) {
  return holds(c.rel, eval_poly(c.poly, x));
}

ExtRational eval_function(const PLCostFunction& f, std::span<const Rational> x) {
  if (x.size() != f.arity) throw UsageError("point length differs from function arity");
  std::optional<Rational> found;
  for (const Piece& piece : f.pieces) {
    bool inside = true;
    for (const LinearConstraint& c : piece.guard) {
      if (!holds(c, x)) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    Rational v = eval_poly(piece.value, x);
    if (found && *found != v) {
      throw InvalidInstanceError("overlapping pieces disagree at a point");
    }
    found = std::move(v);
  }
  if (!found) return ExtRational::plus_infinity();
  return ExtRational(std::move(*found));
}

ExtRational eval_objective(const Instance& inst, std::span<const Rational> x) {
  if (x.size() != inst.dimension) throw UsageError("point length differs from instance dimension");
  ExtRational total(0L);
  Point sub;
  for (const Term& term : inst.terms) {
    if (term.function_index >= inst.functions.size()) throw UsageError("bad function index");
    sub.clear();
    for (std::size_t v : term.scope) {
      if (v >= x.size()) throw UsageError("scope index out of range");
      sub.push_back(x[v]);
    }
    total += eval_function(inst.functions[term.function_index], sub);
    if (total.is_plus_infinity()) break;
  }
  return total;
}

LinearPolynomial lift_poly(const LinearPolynomial& p, std::span<const std::size_t> scope,
                           std::size_t d) {
  if (scope.size() != p.dimension()) throw UsageError("scope length differs from polynomial dimension");
  LinearPolynomial q(d);
  q.constant = p.constant;
  for (std::size_t j = 0; j < scope.size(); ++j) {
    if (scope[j] >= d) throw UsageError("scope index out of range");
    q.coefficients[scope[j]] += p.coefficients[j];
  }
  return q;
}

LinearConstraint lift_constraint(const LinearConstraint& c, std::span<const std::size_t> scope,
                                 std::size_t d) {
  return {lift_poly(c.poly, scope, d), c.rel};
}

CanonicalForm canonicalize(const LinearPolynomial& p) {
  if (p.is_constant()) throw UsageError("cannot canonicalize a constant polynomial");
  Integer den_lcm = p.constant.get_den();
  for (const auto& a : p.coefficients) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
  }
  Integer num_gcd = 0;
  auto fold_gcd = [&](const Rational& a) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num_mpz_t());
  };
  fold_gcd(p.constant);
  for (const auto& a : p.coefficients) fold_gcd(a);

  int orientation = 1;
  for (const auto& a : p.coefficients) {
    if (a != 0) {
      orientation = sgn(a) > 0 ? 1 : -1;
      break;
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (orientation < 0) scale = -scale;
  return {p * scale, orientation};
}

void validate_instance(const Instance& inst) {
  const std::size_t d = inst.dimension;
  for (std::size_t i = 0; i < inst.functions.size(); ++i) {
    const PLCostFunction& f = inst.functions[i];
    const std::string where = "function " + std::to_string(i);
    for (std::size_t l = 0; l < f.pieces.size(); ++l) {
      const Piece& piece = f.pieces[l];
      if (piece.value.dimension() != f.arity) {
        throw ValidationError(where + ", piece " + std::to_string(l) + ": value has wrong arity");
      }
      for (const auto& c : piece.guard) {
        if (c.poly.dimension() != f.arity) {
          throw ValidationError(where + ", piece " + std::to_string(l) +
                                ": constraint has wrong arity");
        }
      }
    }
  }
  for (std::size_t t = 0; t < inst.terms.size(); ++t) {
    const Term& term = inst.terms[t];
    const std::string where = "term " + std::to_string(t);
    if (term.function_index >= inst.functions.size()) {
      throw ValidationError(where + ": function index " + std::to_string(term.function_index) +
                            " out of range");
    }
    if (term.scope.size() != inst.functions[term.function_index].arity) {
      throw ValidationError(where + ": scope length differs from function arity");
    }
    for (std::size_t v : term.scope) {
      if (v >= d) {
        throw ValidationError(where + ": variable index " + std::to_string(v) +
                              " out of range for dimension " + std::to_string(d));
      }
    }
  }
}

}  // namespace plvcsp
