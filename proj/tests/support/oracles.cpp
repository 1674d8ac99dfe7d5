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

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "plvcsp/arrangement.hpp"

namespace plvcsp::testing {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational pv = m[row][col];
    for (auto& v : m[row]) v /= pv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank_of(Matrix m, std::size_t cols) { return rref(m, cols).size(); }

std::vector<Point> null_space(Matrix m, std::size_t cols) {
  const auto pivots = rref(m, cols);
  std::vector<Point> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Point v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solution of A x = b with free variables at zero, if consistent.
std::optional<Point> particular_solution(const Matrix& a, const std::vector<Rational>& b, std::size_t cols) {
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, cols);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    if (aug[i][cols] != 0) return std::nullopt;
  }
  Point x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

Rational dot(const std::vector<Rational>& a, const Point& x) {
  Rational s;
  for (std::size_t j = 0; j < x.size(); ++j) s += a[j] * x[j];
  return s;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Sign sets a piece may require of a local hyperplane.
enum class SignSet { kAny, kNeg, kZero, kPos, kNonPos, kNonNeg };

bool contains(SignSet s, Sign g) {
  switch (s) {
    case SignSet::kAny:
      return true;
    case SignSet::kNeg:
      return g == Sign::kNeg;
    case SignSet::kZero:
      return g == Sign::kZero;
    case SignSet::kPos:
      return g == Sign::kPos;
    case SignSet::kNonPos:
      return g != Sign::kPos;
    case SignSet::kNonNeg:
      return g != Sign::kNeg;
  }
  return false;
}

bool disjoint(SignSet a, SignSet b) {
  for (Sign g : {Sign::kNeg, Sign::kZero, Sign::kPos}) {
    if (contains(a, g) && contains(b, g)) return false;
  }
  return true;
}

}  // namespace

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_small_rational(Rng& rng, int max_num, int max_den) {
  Rational q(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

Point random_point(Rng& rng, std::size_t d, int max_num, int max_den) {
  Point x(d);
  for (auto& v : x) v = random_small_rational(rng, max_num, max_den);
  return x;
}

LinearPolynomial random_poly(Rng& rng, std::size_t d, int max_abs, bool allow_constant) {
  for (;;) {
    LinearPolynomial p(d);
    p.constant = uniform_int(rng, -max_abs, max_abs);
    for (auto& a : p.coefficients) a = uniform_int(rng, -max_abs, max_abs);
    if (allow_constant || !p.is_constant()) return p;
  }
}

LpProblem random_lp(Rng& rng, std::size_t max_dim, std::size_t max_rows, int max_abs) {
  LpProblem lp;
  lp.dimension = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
  const int rows = uniform_int(rng, 0, static_cast<int>(max_rows));
  for (int i = 0; i < rows; ++i) {
    const Relation rel = uniform_int(rng, 0, 5) == 0 ? Relation::kEq : Relation::kLeq;
    lp.constraints.push_back({random_poly(rng, lp.dimension, max_abs), rel});
  }
  lp.objective = random_poly(rng, lp.dimension, max_abs);
  return lp;
}

MixedSystem random_mixed_system(Rng& rng, std::size_t max_dim, std::size_t max_rows, int max_abs) {
  MixedSystem sys(static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim))));
  const int rows = uniform_int(rng, 0, static_cast<int>(max_rows));
  for (int i = 0; i < rows; ++i) {
    LinearPolynomial p = random_poly(rng, sys.dimension, max_abs);
    if (uniform_int(rng, 0, 1) == 0) {
      sys.strict.push_back(std::move(p));
    } else {
      sys.weak.push_back(std::move(p));
    }
  }
  return sys;
}

Instance random_instance(Rng& rng, const InstanceShape& shape) {
  for (;;) {
    Instance inst;
    inst.dimension = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(shape.max_dim)));
    const int num_functions = uniform_int(rng, 1, 3);
    for (int fi = 0; fi < num_functions; ++fi) {
      PLCostFunction f;
      f.arity = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(std::min<std::size_t>(2, inst.dimension))));
      std::vector<LinearPolynomial> local;
      const int num_local = uniform_int(rng, 1, 2);
      for (int h = 0; h < num_local; ++h) local.push_back(random_poly(rng, f.arity, shape.max_abs, false));

      const int style = uniform_int(rng, 0, 3);
      if (style == 0) {
        // |h| + c, split as h < 0 and -h <= 0 (or h <= 0 and -h < 0).
        const LinearPolynomial& h = local[0];
        const bool strict_left = uniform_int(rng, 0, 1) == 0;
        const Rational c = uniform_int(rng, -shape.max_abs, shape.max_abs);
        Piece left{{{h, strict_left ? Relation::kLt : Relation::kLeq}}, -h};
        Piece right{{{-h, strict_left ? Relation::kLeq : Relation::kLt}}, h};
        left.value.constant += c;
        right.value.constant += c;
        f.pieces = {left, right};
      } else {
        const int num_pieces = uniform_int(rng, 1, static_cast<int>(shape.max_pieces));
        std::vector<std::vector<SignSet>> chosen;
        for (int attempt = 0; attempt < 20 && static_cast<int>(chosen.size()) < num_pieces; ++attempt) {
          std::vector<SignSet> sets(local.size());
          for (auto& s : sets) s = static_cast<SignSet>(uniform_int(rng, 0, 5));
          bool ok = true;
          for (const auto& other : chosen) {
            bool sep = false;
            for (std::size_t h = 0; h < local.size(); ++h) sep = sep || disjoint(sets[h], other[h]);
            ok = ok && sep;
          }
          if (ok) chosen.push_back(std::move(sets));
        }
        for (const auto& sets : chosen) {
          Piece piece;
          for (std::size_t h = 0; h < local.size(); ++h) {
            const Rational scale = uniform_int(rng, 1, 3);
            const LinearPolynomial p = local[h] * scale;
            switch (sets[h]) {
              case SignSet::kAny:
                break;
              case SignSet::kNeg:
                piece.guard.push_back({p, Relation::kLt});
                break;
              case SignSet::kZero:
                if (uniform_int(rng, 0, 1) == 0) {
                  piece.guard.push_back({p, Relation::kEq});
                } else {
                  piece.guard.push_back({p, Relation::kLeq});
                  piece.guard.push_back({-p, Relation::kLeq});
                }
                break;
              case SignSet::kPos:
                piece.guard.push_back({-p, Relation::kLt});
                break;
              case SignSet::kNonPos:
                piece.guard.push_back({p, Relation::kLeq});
                break;
              case SignSet::kNonNeg:
                piece.guard.push_back({-p, Relation::kLeq});
                break;
            }
          }
          piece.value = random_poly(rng, f.arity, shape.max_abs);
          f.pieces.push_back(std::move(piece));
        }
      }
      inst.functions.push_back(std::move(f));
    }

    const int num_terms = uniform_int(rng, 1, static_cast<int>(shape.max_terms));
    for (int t = 0; t < num_terms; ++t) {
      Term term;
      term.function_index = static_cast<std::size_t>(uniform_int(rng, 0, num_functions - 1));
      for (std::size_t j = 0; j < inst.functions[term.function_index].arity; ++j) {
        term.scope.push_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(inst.dimension) - 1)));
      }
      inst.terms.push_back(std::move(term));
    }
    if (extract_polynomials(inst).size() <= shape.max_polys) return inst;
  }
}

OracleLpResult vertex_enumeration_lp(const LpProblem& problem) {
  const std::size_t d = problem.dimension;
  Matrix a;
  std::vector<Rational> beta;
  for (const auto& c : problem.constraints) {
    a.push_back(c.poly.coefficients);
    beta.push_back(-c.poly.constant);
    if (c.rel == Relation::kEq) {
      a.push_back((-c.poly).coefficients);
      beta.push_back(c.poly.constant);
    }
  }
  const std::size_t m = a.size();
  const std::size_t r = m == 0 ? 0 : rank_of(a, d);
  const auto& cost = problem.objective.coefficients;

  auto feasible_at = [&](const Point& x) {
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(a[i], x) > beta[i]) return false;
    }
    return true;
  };

  std::vector<Point> candidates;
  if (r == 0) {
    Point zero(d);
    if (feasible_at(zero)) candidates.push_back(zero);
  } else {
    for_each_subset(m, r, [&](const std::vector<std::size_t>& s) {
      Matrix as;
      std::vector<Rational> bs;
      for (std::size_t i : s) {
        as.push_back(a[i]);
        bs.push_back(beta[i]);
      }
      if (rank_of(as, d) != r) return;
      auto x = particular_solution(as, bs, d);
      if (x && feasible_at(*x)) candidates.push_back(std::move(*x));
    });
  }
  OracleLpResult out;
  if (candidates.empty()) return out;

  // Objective not orthogonal to the lineality space.
  for (const auto& l : null_space(a.empty() ? Matrix{} : a, d)) {
    if (dot(cost, l) != 0) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
  }
  if (r > 0) {
    bool unbounded = false;
    for_each_subset(m, r - 1, [&](const std::vector<std::size_t>& s) {
      if (unbounded) return;
      Matrix as;
      for (std::size_t i : s) as.push_back(a[i]);
      if (!as.empty() && rank_of(as, d) != r - 1) return;
      const auto basis = as.empty() ? null_space(Matrix{}, d) : null_space(as, d);
      for (const auto& v : basis) {
        bool in_lineality = true;
        for (std::size_t i = 0; i < m; ++i) in_lineality = in_lineality && dot(a[i], v) == 0;
        if (in_lineality) continue;
        for (int sgn_dir : {1, -1}) {
          bool recession = true;
          for (std::size_t i = 0; i < m; ++i) {
            const Rational slope = dot(a[i], v) * sgn_dir;
            if (slope > 0) recession = false;
          }
          if (recession && dot(cost, v) * sgn_dir < 0) unbounded = true;
        }
      }
    });
    if (unbounded) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
  }

  out.status = LpStatus::kOptimal;
  bool first = true;
  for (const auto& x : candidates) {
    const Rational v = dot(cost, x) + problem.objective.constant;
    if (first || v < out.value) out.value = v;
    first = false;
  }
  return out;
}

bool in_general_position(const std::vector<LinearPolynomial>& polys, std::size_t d) {
  const std::size_t k = polys.size();
  bool ok = true;
  for_each_subset(k, std::min(k, d), [&](const std::vector<std::size_t>& idx) {
    Matrix m;
    for (std::size_t i : idx) m.push_back(polys[i].coefficients);
    ok = ok && rank_of(m, d) == idx.size();
  });
  for_each_subset(k, d + 1, [&](const std::vector<std::size_t>& idx) {
    Matrix m;
    for (std::size_t i : idx) {
      auto row = polys[i].coefficients;
      row.push_back(polys[i].constant);
      m.push_back(std::move(row));
    }
    ok = ok && rank_of(m, d + 1) == d + 1;
  });
  return ok;
}

std::vector<LinearPolynomial> random_generic_polys(Rng& rng, std::size_t d, std::size_t k) {
  for (;;) {
    std::vector<LinearPolynomial> polys;
    for (std::size_t i = 0; i < k; ++i) polys.push_back(canonicalize(random_poly(rng, d, 30, false)).poly);
    if (in_general_position(polys, d)) return polys;
  }
}

std::vector<std::string> brute_force_cells(std::size_t d, const std::vector<LinearPolynomial>& polys) {
  const std::size_t k = polys.size();
  std::vector<std::string> out;
  std::string signs(k, '-');
  const std::string order = "-0+";
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      MixedSystem sys(d);
      for (std::size_t j = 0; j < k; ++j) {
        if (signs[j] == '-') sys.strict.push_back(polys[j]);
        if (signs[j] == '+') sys.strict.push_back(-polys[j]);
        if (signs[j] == '0') {
          sys.weak.push_back(polys[j]);
          sys.weak.push_back(-polys[j]);
        }
      }
      if (feasible_oracle(sys)) out.push_back(signs);
      return;
    }
    for (char c : order) {
      signs[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

ExtRational naive_objective(const Instance& inst, const Point& x) {
  ExtRational total(0L);
  for (const Term& term : inst.terms) {
    const PLCostFunction& f = inst.functions[term.function_index];
    std::optional<Rational> value;
    for (const Piece& piece : f.pieces) {
      bool inside = true;
      for (const LinearConstraint& c : piece.guard) {
        Rational lhs = c.poly.constant;
        for (std::size_t j = 0; j < term.scope.size(); ++j) lhs += c.poly.coefficients[j] * x[term.scope[j]];
        const int s = sgn(lhs);
        inside = inside && (c.rel == Relation::kLt ? s < 0 : c.rel == Relation::kLeq ? s <= 0 : s == 0);
      }
      if (!inside) continue;
      Rational v = piece.value.constant;
      for (std::size_t j = 0; j < term.scope.size(); ++j) v += piece.value.coefficients[j] * x[term.scope[j]];
      value = v;
    }
    if (!value) return ExtRational::plus_infinity();
    total += ExtRational(*value);
  }
  return total;
}

}  // namespace plvcsp::testing
