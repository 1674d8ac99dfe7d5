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

#include "plvcsp/strict.hpp"

#include "plvcsp/errors.hpp"
#include "plvcsp/lp.hpp"

namespace plvcsp {
namespace {

std::vector<Rational> homogeneous_row(const LinearPolynomial& p) {
  std::vector<Rational> row(p.coefficients);
  row.push_back(p.constant);
  return row;
}

void check_dimension(const MixedSystem& sys, const LinearPolynomial& p) {
  if (p.dimension() != sys.dimension) throw UsageError("row dimension differs from system dimension");
}

}  // namespace

void MixedSystem::add(const LinearConstraint& c) {
  check_dimension(*this, c.poly);
  switch (c.rel) {
    case Relation::kLt:
      strict.push_back(c.poly);
      break;
    case Relation::kLeq:
      weak.push_back(c.poly);
      break;
    case Relation::kEq:
      weak.push_back(c.poly);
      weak.push_back(-c.poly);
      break;
  }
}

bool MixedSystem::satisfied_by(std::span<const Rational> x) const {
  for (const auto& p : strict) {
    if (eval_poly(p, x) >= 0) return false;
  }
  for (const auto& p : weak) {
    if (eval_poly(p, x) > 0) return false;
  }
  return true;
}

MotzkinDual homogenize(const MixedSystem& sys) {
  MotzkinDual dual;
  dual.dimension = sys.dimension;
  for (const auto& p : sys.strict) {
    check_dimension(sys, p);
    dual.strict_rows.push_back(homogeneous_row(p));
  }
  std::vector<Rational> positivity(sys.dimension + 1);
  positivity.back() = -1;
  dual.strict_rows.push_back(std::move(positivity));
  for (const auto& p : sys.weak) {
    check_dimension(sys, p);
    dual.weak_rows.push_back(homogeneous_row(p));
  }
  return dual;
}

bool verify_certificate(const MotzkinDual& dual, const MotzkinCertificate& cert) {
  if (cert.y.size() != dual.strict_rows.size() || cert.z.size() != dual.weak_rows.size()) {
    return false;
  }
  bool nonzero = false;
  for (const auto& v : cert.y) {
    if (v < 0) return false;
    if (v != 0) nonzero = true;
  }
  for (const auto& v : cert.z) {
    if (v < 0) return false;
  }
  if (!nonzero) return false;
  for (std::size_t i = 0; i <= dual.dimension; ++i) {
    Rational sum;
    for (std::size_t j = 0; j < cert.y.size(); ++j) sum += dual.strict_rows[j][i] * cert.y[j];
    for (std::size_t j = 0; j < cert.z.size(); ++j) sum += dual.weak_rows[j][i] * cert.z[j];
    if (sum != 0) return false;
  }
  return true;
}

FeasibilityVerdict decide_feasibility(const MixedSystem& sys) {
  const MotzkinDual dual = homogenize(sys);
  const std::size_t ny = dual.strict_rows.size();
  const std::size_t nz = dual.weak_rows.size();
  const std::size_t width = sys.dimension + 1;

  // minimize -sum(y) subject to A^T y + B^T z = 0, y, z >= 0.
  StandardFormLp lp;
  lp.num_vars = ny + nz;
  lp.cost.assign(ny + nz, Rational(0));
  for (std::size_t j = 0; j < ny; ++j) lp.cost[j] = -1;
  lp.rows.resize(width);
  for (std::size_t i = 0; i < width; ++i) {
    auto& row = lp.rows[i];
    row.rel = Relation::kEq;
    row.coefficients.resize(ny + nz);
    for (std::size_t j = 0; j < ny; ++j) row.coefficients[j] = dual.strict_rows[j][i];
    for (std::size_t j = 0; j < nz; ++j) row.coefficients[ny + j] = dual.weak_rows[j][i];
  }

  const StandardFormResult res = solve_standard_form(lp);
  FeasibilityVerdict verdict;
  switch (res.status) {
    case LpStatus::kInfeasible:
      throw InternalError("alternative system LP reported infeasible; (y, z) = 0 is feasible");
    case LpStatus::kOptimal:
      for (std::size_t j = 0; j < ny; ++j) {
        if (res.point[j] != 0) throw InternalError("bounded alternative LP with nonzero y");
      }
      verdict.feasible = true;
      return verdict;
    case LpStatus::kUnbounded:
      break;
  }
  // The ray lies in the cone itself and has -sum(y) < 0, so y != 0.
  MotzkinCertificate cert;
  cert.y.assign(res.ray.begin(), res.ray.begin() + static_cast<std::ptrdiff_t>(ny));
  cert.z.assign(res.ray.begin() + static_cast<std::ptrdiff_t>(ny), res.ray.end());
  verdict.feasible = false;
  verdict.certificate = std::move(cert);
  return verdict;
}

bool feasible_oracle(const MixedSystem& sys) {
  const std::size_t d = sys.dimension;
  // Variables (x_1, ..., x_d, s); maximize s.
  LpProblem lp;
  lp.dimension = d + 1;
  lp.objective = LinearPolynomial::variable(d + 1, d);
  auto widen = [d](const LinearPolynomial& p) {
    LinearPolynomial q(d + 1);
    q.constant = p.constant;
    for (std::size_t j = 0; j < d; ++j) q.coefficients[j] = p.coefficients[j];
    return q;
  };
  for (const auto& p : sys.strict) {
    LinearPolynomial q = widen(p);
    q.coefficients[d] = 1;
    lp.constraints.push_back({std::move(q), Relation::kLeq});
  }
  for (const auto& p : sys.weak) lp.constraints.push_back({widen(p), Relation::kLeq});
  LinearPolynomial cap = LinearPolynomial::variable(d + 1, d);
  cap.constant = -1;
  lp.constraints.push_back({std::move(cap), Relation::kLeq});

  const LpOutcome out = solve_lp_max(lp);
  if (out.status == LpStatus::kUnbounded) throw InternalError("slack LP unbounded despite s <= 1");
  return out.status == LpStatus::kOptimal && out.value > 0;
}

std::optional<Point> feasible_point(const MixedSystem& sys) {
  const std::size_t d = sys.dimension;
  const MotzkinDual dual = homogenize(sys);
  // Variables (t_1, ..., t_{d+1}, s); maximize s.
  const std::size_t n = d + 2;
  auto row_poly = [n](const std::vector<Rational>& row, bool with_slack) {
    LinearPolynomial q(n);
    for (std::size_t j = 0; j < row.size(); ++j) q.coefficients[j] = row[j];
    if (with_slack) q.coefficients[n - 1] = 1;
    return q;
  };
  LpProblem lp;
  lp.dimension = n;
  lp.objective = LinearPolynomial::variable(n, n - 1);
  for (const auto& row : dual.strict_rows) lp.constraints.push_back({row_poly(row, true), Relation::kLeq});
  for (const auto& row : dual.weak_rows) lp.constraints.push_back({row_poly(row, false), Relation::kLeq});
  LinearPolynomial cap = LinearPolynomial::variable(n, n - 1);
  cap.constant = -1;
  lp.constraints.push_back({std::move(cap), Relation::kLeq});

  const LpOutcome out = solve_lp_max(lp);
  if (out.status != LpStatus::kOptimal || out.value <= 0) return std::nullopt;
  const Rational& t = out.witness[d];
  Point x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = out.witness[j] / t;
  if (!sys.satisfied_by(x)) throw InternalError("recovered point violates the system");
  return x;
}

}  // namespace plvcsp
