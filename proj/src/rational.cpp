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

#include "plvcsp/rational.hpp"

#include <cctype>

#include "plvcsp/errors.hpp"

namespace plvcsp {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "+inf" || text == "inf") return plus_infinity();
  if (text == "-inf") return minus_infinity();
  return ExtRational(parse_rational(text));
}

const Rational& ExtRational::value() const {
  if (!is_finite()) throw InternalError("value() on an infinite ExtRational");
  return value_;
}

std::string ExtRational::to_string() const {
  switch (kind_) {
    case Kind::kMinusInfinity:
      return "-inf";
    case Kind::kPlusInfinity:
      return "+inf";
    case Kind::kFinite:
      break;
  }
  return plvcsp::to_string(value_);
}

ExtRational ExtRational::operator-() const {
  switch (kind_) {
    case Kind::kMinusInfinity:
      return plus_infinity();
    case Kind::kPlusInfinity:
      return minus_infinity();
    case Kind::kFinite:
      break;
  }
  return ExtRational(Rational(-value_));
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  using Kind = ExtRational::Kind;
  if ((a.is_plus_infinity() && b.is_minus_infinity()) ||
      (a.is_minus_infinity() && b.is_plus_infinity())) {
    throw InternalError("(+inf) + (-inf) is undefined");
  }
  if (a.kind_ != Kind::kFinite) return a;
  if (b.kind_ != Kind::kFinite) return b;
  return ExtRational(Rational(a.value_ + b.value_));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.is_finite() && a.value_ < b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& value) {
  return os << value.to_string();
}

}  // namespace plvcsp
