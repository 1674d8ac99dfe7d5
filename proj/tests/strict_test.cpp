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

#include "doctest.h"
#include "plvcsp/strict.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace plvcsp;
using namespace plvcsp::testing;

namespace {

MixedSystem system_of(std::size_t d, std::initializer_list<LinearConstraint> cs) {
  MixedSystem sys(d);
  for (const auto& c : cs) sys.add(c);
  return sys;
}

using Row = std::vector<Rational>;

}  // namespace

TEST_CASE("homogenize") {
  const auto dual = homogenize(system_of(1, {lt(poly({1, 2})), leq(poly({-3, 1}))}));
  CHECK(dual.dimension == 1);
  REQUIRE(dual.strict_rows.size() == 2);
  CHECK(dual.strict_rows[0] == Row{2, 1});
  CHECK(dual.strict_rows[1] == Row{0, -1});
  REQUIRE(dual.weak_rows.size() == 1);
  CHECK(dual.weak_rows[0] == Row{1, -3});

  const auto eqd = homogenize(system_of(2, {eq(poly({5, 1, -1}))}));
  CHECK(eqd.strict_rows.size() == 1);
  REQUIRE(eqd.weak_rows.size() == 2);
  CHECK(eqd.weak_rows[0] == Row{1, -1, 5});
  CHECK(eqd.weak_rows[1] == Row{-1, 1, -5});
}

TEST_CASE("feasible: worked examples") {
  // x < 0 and -x < 0
  const auto a = system_of(1, {lt(poly({0, 1})), lt(poly({0, -1}))});
  const auto va = decide_feasibility(a);
  CHECK_FALSE(va.feasible);
  REQUIRE(va.certificate.has_value());
  CHECK(verify_certificate(homogenize(a), *va.certificate));

  // x <= 0 and -x <= 0: the point 0
  CHECK(feasible(system_of(1, {leq(poly({0, 1})), leq(poly({0, -1}))})));

  // x < 1 and -x < 0: open interval
  const auto b = system_of(1, {lt(poly({-1, 1})), lt(poly({0, -1}))});
  CHECK(feasible(b));
  const auto pt = feasible_point(b);
  REQUIRE(pt.has_value());
  CHECK(b.satisfied_by(*pt));

  // 0 < 0 and the empty system
  CHECK_FALSE(feasible(system_of(2, {lt(poly({0, 0, 0}))})));
  CHECK(feasible(MixedSystem(3)));
  CHECK(feasible(MixedSystem(0)));
  CHECK_FALSE(feasible(system_of(0, {leq(poly({1}))})));

  // x + y < 0, -x <= 0, -y <= 0: only the origin on the closure
  CHECK_FALSE(feasible(system_of(2, {lt(poly({0, 1, 1})), leq(poly({0, -1, 0})), leq(poly({0, 0, -1}))})));
}

TEST_CASE("feasible_oracle: worked examples") {
  CHECK_FALSE(feasible_oracle(system_of(1, {lt(poly({0, 1})), lt(poly({0, -1}))})));
  CHECK(feasible_oracle(system_of(1, {leq(poly({0, 1})), leq(poly({0, -1}))})));
  CHECK(feasible_oracle(system_of(1, {lt(poly({-1, 1})), lt(poly({0, -1}))})));
  CHECK(feasible_oracle(MixedSystem(2)));
}

TEST_CASE("verify_certificate rejects bad certificates") {
  const auto dual = homogenize(system_of(1, {lt(poly({0, 1})), lt(poly({0, -1}))}));
  CHECK(verify_certificate(dual, MotzkinCertificate{{1, 1, 0}, {}}));
  CHECK_FALSE(verify_certificate(dual, MotzkinCertificate{{0, 0, 0}, {}}));   // y = 0
  CHECK_FALSE(verify_certificate(dual, MotzkinCertificate{{1, 2, 0}, {}}));   // A^T y != 0
  CHECK_FALSE(verify_certificate(dual, MotzkinCertificate{{-1, -1, 0}, {}})); // y < 0
  CHECK_FALSE(verify_certificate(dual, MotzkinCertificate{{1, 1}, {}}));      // wrong length
}

TEST_CASE("property: Motzkin route agrees with the slack oracle") {
  Rng rng(31);
  int infeasible = 0, feasible_count = 0;
  for (int iter = 0; iter < 1200; ++iter) {
    MixedSystem sys = random_mixed_system(rng, 4, 8, 3);
    // Tight cases: turn a weak row into an equality.
    if (!sys.weak.empty() && iter % 3 == 0) sys.weak.push_back(-sys.weak.front());
    const FeasibilityVerdict v = decide_feasibility(sys);
    REQUIRE_MESSAGE(v.feasible == feasible_oracle(sys), "iteration ", iter);
    if (v.feasible) {
      ++feasible_count;
      CHECK_FALSE(v.certificate.has_value());
      const auto pt = feasible_point(sys);
      REQUIRE(pt.has_value());
      CHECK(sys.satisfied_by(*pt));
    } else {
      ++infeasible;
      REQUIRE(v.certificate.has_value());
      CHECK(verify_certificate(homogenize(sys), *v.certificate));
      CHECK_FALSE(feasible_point(sys).has_value());
    }
  }
  CHECK(infeasible > 100);
  CHECK(feasible_count > 100);
}

TEST_CASE("property: positive scaling and implied rows do not change the verdict") {
  Rng rng(32);
  for (int iter = 0; iter < 300; ++iter) {
    const MixedSystem sys = random_mixed_system(rng, 3, 6, 3);
    const bool base = feasible(sys);

    MixedSystem scaled = sys;
    for (auto& p : scaled.strict) p *= Rational(uniform_int(rng, 1, 9), 1);
    for (auto& p : scaled.weak) {
      Rational s(uniform_int(rng, 1, 9), uniform_int(rng, 1, 5));
      s.canonicalize();
      p *= s;
    }
    CHECK(feasible(scaled) == base);

    // A nonnegative combination of weak rows plus a slack constant is implied.
    MixedSystem implied = sys;
    LinearPolynomial combo(sys.dimension);
    for (const auto& p : sys.weak) combo += p * Rational(uniform_int(rng, 0, 2), 1);
    combo.constant -= uniform_int(rng, 0, 3);
    implied.weak.push_back(combo);
    CHECK(feasible(implied) == base);
  }
}
