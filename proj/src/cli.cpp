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

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "plvcsp/arrangement.hpp"
#include "plvcsp/errors.hpp"
#include "plvcsp/io.hpp"
#include "plvcsp/solver.hpp"

namespace plvcsp {
namespace {

int cmd_solve(const std::string& file, bool want_witness, bool want_stats, std::ostream& out) {
  const Instance inst = load_instance(file);
  CallCounters counters;
  SolveOptions options;
  options.counters = &counters;
  const WitnessedResult res = solve_with_witness(inst, options);
  out << format_result(res.result) << "\n";
  if (want_witness) {
    out << "witness = " << (res.witness ? format_point(*res.witness) : std::string("none")) << "\n";
  }
  if (want_stats) {
    out << "stat: cells=" << counters.cells.load() << " lpf_calls=" << counters.feasibility_calls()
        << " lp_calls=" << counters.bound_lps.load() << "\n";
  }
  return kExitOk;
}

int cmd_cells(const std::string& file, bool list, std::ostream& out) {
  const Instance inst = load_instance(file);
  const Arrangement arr = build_arrangement(inst);
  out << "k = " << arr.polys->size() << ", cells = " << arr.cells.size()
      << ", tau = " << tau(arr.dimension, arr.polys->size()) << "\n";
  if (list) {
    for (std::size_t j = 0; j < arr.polys->size(); ++j) {
      out << "p" << j << " = " << (*arr.polys)[j].to_string() << "\n";
    }
    for (std::size_t i = 0; i < arr.cells.size(); ++i) {
      out << "cell " << i << ": " << arr.cells[i].signs_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_check(const std::string& file, bool disjointness, std::ostream& out) {
  const Instance inst = load_instance(file);
  if (disjointness) {
    const auto violations = validate_disjointness(inst);
    for (const auto& v : violations) {
      out << "overlap: function " << v.function << " pieces " << v.first_piece << " and "
          << v.second_piece << " at " << format_point(v.point) << "\n";
    }
    if (!violations.empty()) return kExitValidationError;
  }
  out << "ok: dimension=" << inst.dimension << " functions=" << inst.functions.size()
      << " terms=" << inst.terms.size() << " k=" << extract_polynomials(inst).size() << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& file, const std::string& point_text, std::ostream& out) {
  const Instance inst = load_instance(file);
  Point x;
  try {
    x = parse_point(point_text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--point: ") + e.what());
  }
  if (x.size() != inst.dimension) {
    throw ValidationError("--point has " + std::to_string(x.size()) + " coordinates, instance has " +
                          std::to_string(inst.dimension));
  }
  out << "value = " << eval_objective(inst, x).to_string() << "\n";
  return kExitOk;
}

int cmd_naive(const std::string& file, std::ostream& out) {
  const Instance inst = load_instance(file);
  out << format_result(solve_naive(inst)) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact infimum and attainment for piecewise-linear VCSP instances", "plvcsp"};
  app.require_subcommand(1);

  std::string file;
  bool witness = false;
  bool stats = false;
  bool list = false;
  bool disjointness = false;
  std::string point;

  auto* solve_cmd = app.add_subcommand("solve", "Compute the infimum and whether it is attained");
  solve_cmd->add_option("file", file, "Instance document")->required();
  solve_cmd->add_flag("--witness", witness, "Print a minimizer when the infimum is attained");
  solve_cmd->add_flag("--stats", stats, "Print cell and LP call counts");

  auto* cells_cmd = app.add_subcommand("cells", "Count the cells of the guard arrangement");
  cells_cmd->add_option("file", file, "Instance document")->required();
  cells_cmd->add_flag("--list", list, "Print the polynomials and every cell's sign vector");

  auto* check_cmd = app.add_subcommand("check", "Parse and validate an instance");
  check_cmd->add_option("file", file, "Instance document")->required();
  check_cmd->add_flag("--disjointness", disjointness, "Also check that pieces are pairwise disjoint");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the objective at a point");
  eval_cmd->add_option("file", file, "Instance document")->required();
  eval_cmd->add_option("--point", point, "Comma separated rationals, e.g. \"1/2,-3\"")->required();

  auto* naive_cmd = app.add_subcommand("naive", "Solve by exhaustive sign vectors (small instances)");
  naive_cmd->add_option("file", file, "Instance document")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitParseError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(file, witness, stats, out);
    if (cells_cmd->parsed()) return cmd_cells(file, list, out);
    if (check_cmd->parsed()) return cmd_check(file, disjointness, out);
    if (eval_cmd->parsed()) return cmd_eval(file, point, out);
    if (naive_cmd->parsed()) return cmd_naive(file, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  } catch (const InvalidInstanceError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  } catch (const UsageError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidationError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitParseError;
}

}  // namespace plvcsp
