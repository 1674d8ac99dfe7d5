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

// Instance documents (JSON, see docs/format.md), result formatting and the
// command-line front end.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plvcsp/model.hpp"

namespace plvcsp {

// Throws ParseError for malformed documents and ValidationError for
// inconsistent ones. Pieces valued "+inf" are dropped, constant guard
// constraints are resolved (true ones removed, pieces with a false one
// removed).
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

// Inverse of parse_instance for normalized instances.
std::string render_instance(const Instance& inst);

struct DisjointnessViolation {
  std::size_t function = 0;
  std::size_t first_piece = 0;
  std::size_t second_piece = 0;
  Point point;  // lies in both pieces
};

// Pairs of pieces of the same function whose guards intersect, checked in
// the function's own arity.
std::vector<DisjointnessViolation> validate_disjointness(const Instance& inst);

// "value = <v> (minimum, attained)" or "value = <v> (infimum, not attained)".
std::string format_result(const SolveResult& result);

// Comma separated rationals, e.g. "1/2,-3,0".
Point parse_point(std::string_view text);
std::string format_point(std::span<const Rational> x);

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitValidationError = 2;
inline constexpr int kExitInternalError = 3;

// Subcommands: solve, cells, check, eval, naive. args excludes the program
// name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plvcsp
