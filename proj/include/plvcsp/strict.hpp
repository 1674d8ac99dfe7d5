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

// Feasibility of mixed systems of strict and weak linear inequalities.
//
// The main route homogenizes the system with an extra coordinate t forced
// positive (-t < 0), then decides the alternative system
//
//     A^T y + B^T z = 0,  y >= 0,  z >= 0,  y != 0
//
// with a single LP: minimize -sum(y). That LP is always feasible at
// (y, z) = 0 and is unbounded exactly when a nonzero y exists, in which
// case the unbounded ray is the infeasibility certificate.
//
// feasible_oracle() decides the same predicate by an unrelated route (a
// slack variable maximized inside the original space) for cross-checks.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plvcsp/model.hpp"

namespace plvcsp {

// strict[j](x) < 0 and weak[j](x) <= 0 for all j.
struct MixedSystem {
  std::size_t dimension = 0;
  std::vector<LinearPolynomial> strict;
  std::vector<LinearPolynomial> weak;

  explicit MixedSystem(std::size_t d = 0) : dimension(d) {}

  // Equalities become two weak rows.
  void add(const LinearConstraint& c);
  void add_all(std::span<const LinearConstraint> cs) {
    for (const auto& c : cs) add(c);
  }

  bool satisfied_by(std::span<const Rational> x) const;
};

// Homogenized coefficient rows (a_1, ..., a_d, a_0). The strict block
// carries one extra final row (0, ..., 0, -1) for -t < 0.
struct MotzkinDual {
  std::size_t dimension = 0;
  std::vector<std::vector<Rational>> strict_rows;  // A: (k1 + 1) x (d + 1)
  std::vector<std::vector<Rational>> weak_rows;    // B: k2 x (d + 1)
};

MotzkinDual homogenize(const MixedSystem& sys);

// (y, z) >= 0 with y != 0 and A^T y + B^T z = 0.
struct MotzkinCertificate {
  std::vector<Rational> y;
  std::vector<Rational> z;
};

bool verify_certificate(const MotzkinDual& dual, const MotzkinCertificate& cert);

struct FeasibilityVerdict {
  bool feasible = false;
  std::optional<MotzkinCertificate> certificate;  // set iff !feasible
};

FeasibilityVerdict decide_feasibility(const MixedSystem& sys);

inline bool feasible(const MixedSystem& sys) { return decide_feasibility(sys).feasible; }

// Slack route: maximize s subject to p(x) + s <= 0 on strict rows,
// p(x) <= 0 on weak rows and s <= 1; feasible iff the optimum is positive.
bool feasible_oracle(const MixedSystem& sys);

// A point satisfying every row, or nullopt when the system is empty.
// Solved on the homogenized system: maximize s with a t + s <= 0 on the
// strict rows (including -t), b t <= 0 on the weak rows and s <= 1, then
// x = t / t_{d+1}.
std::optional<Point> feasible_point(const MixedSystem& sys);

}  // namespace plvcsp
