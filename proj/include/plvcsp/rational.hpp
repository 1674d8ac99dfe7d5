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

#pragma once

#include <gmpxx.h>

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plvcsp {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

// A point of Q^d.
using Point = std::vector<Rational>;

// Parses "[+-]digits" or "[+-]digits/digits". Throws ParseError on bad
// syntax and ValidationError on a zero denominator.
Rational parse_rational(std::string_view text);

// Integer text for integral values, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

// Rationals extended with +inf and -inf.
//
// Ordering is -inf < q < +inf for every finite q. Adding +inf to -inf is a
// logic error and throws InternalError.
class ExtRational {
 public:
  enum class Kind { kMinusInfinity, kFinite, kPlusInfinity };

  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtRational(long value) : value_(value) {}                 // NOLINT

  static ExtRational plus_infinity() { return ExtRational(Kind::kPlusInfinity); }
  static ExtRational minus_infinity() { return ExtRational(Kind::kMinusInfinity); }

  // Accepts the output of to_string(): a rational literal, "+inf" or "-inf".
  static ExtRational parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_plus_infinity() const { return kind_ == Kind::kPlusInfinity; }
  bool is_minus_infinity() const { return kind_ == Kind::kMinusInfinity; }

  // Throws InternalError when not finite.
  const Rational& value() const;

  std::string to_string() const;

  ExtRational operator-() const;
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  ExtRational& operator+=(const ExtRational& other) { return *this = *this + other; }

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator<(const ExtRational& a, const ExtRational& b);
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

 private:
  explicit ExtRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_;  // zero unless finite
};

std::ostream& operator<<(std::ostream& os, const ExtRational& value);

}  // namespace plvcsp
