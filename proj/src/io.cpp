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

#include "plvcsp/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "plvcsp/errors.hpp"
#include "plvcsp/strict.hpp"

namespace plvcsp {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + name + "\"");
  return *it;
}

std::size_t read_index(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer()) throw ValidationError(where + ": must be non-negative");
  throw ParseError(where + ": expected an integer");
}

Rational read_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  throw ParseError(where + ": expected a rational literal (string or integer)");
}

// [a_0, a_1, ..., a_arity]
LinearPolynomial read_poly(const json& v, std::size_t arity, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a coefficient list");
  if (v.size() != arity + 1) {
    throw ValidationError(where + ": expected " + std::to_string(arity + 1) + " coefficients, got " +
                          std::to_string(v.size()));
  }
  LinearPolynomial p(arity);
  p.constant = read_rational(v[0], where + "[0]");
  for (std::size_t j = 0; j < arity; ++j) {
    p.coefficients[j] = read_rational(v[j + 1], where + "[" + std::to_string(j + 1) + "]");
  }
  return p;
}

Relation read_relation(const json& v, const std::string& where) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "<=") return Relation::kLeq;
    if (s == "<") return Relation::kLt;
    if (s == "=") return Relation::kEq;
  }
  throw ParseError(where + ": relation must be \"<=\", \"<\" or \"=\"");
}

const json& read_array(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_array()) throw ParseError(where + ": \"" + name + "\" must be an array");
  return v;
}

ordered_json write_poly(const LinearPolynomial& p) {
  ordered_json arr = ordered_json::array();
  arr.push_back(to_string(p.constant));
  for (const auto& a : p.coefficients) arr.push_back(to_string(a));
  return arr;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }

  Instance inst;
  inst.dimension = read_index(field(doc, "dimension", "document"), "dimension");

  const json& functions = read_array(doc, "functions", "document");
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const std::string fw = "functions[" + std::to_string(i) + "]";
    PLCostFunction f;
    f.arity = read_index(field(functions[i], "arity", fw), fw + ".arity");
    const json& pieces = read_array(functions[i], "pieces", fw);
    for (std::size_t l = 0; l < pieces.size(); ++l) {
      const std::string pw = fw + ".pieces[" + std::to_string(l) + "]";
      Piece piece;
      bool dead = false;
      const json& constraints = read_array(pieces[l], "constraints", pw);
      for (std::size_t c = 0; c < constraints.size(); ++c) {
        const std::string cw = pw + ".constraints[" + std::to_string(c) + "]";
        LinearConstraint con{read_poly(field(constraints[c], "poly", cw), f.arity, cw + ".poly"),
                             read_relation(field(constraints[c], "rel", cw), cw + ".rel")};
        if (con.poly.is_constant()) {
          if (!holds(con.rel, con.poly.constant)) dead = true;
          continue;
        }
        piece.guard.push_back(std::move(con));
      }
      const json& value = field(pieces[l], "value", pw);
      if (value.is_string() && value.get<std::string>() == "+inf") continue;
      piece.value = read_poly(value, f.arity, pw + ".value");
      if (!dead) f.pieces.push_back(std::move(piece));
    }
    inst.functions.push_back(std::move(f));
  }

  const json& terms = read_array(doc, "terms", "document");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tw = "terms[" + std::to_string(t) + "]";
    Term term;
    term.function_index = read_index(field(terms[t], "function", tw), tw + ".function");
    const json& scope = read_array(terms[t], "scope", tw);
    for (std::size_t j = 0; j < scope.size(); ++j) {
      term.scope.push_back(read_index(scope[j], tw + ".scope[" + std::to_string(j) + "]"));
    }
    inst.terms.push_back(std::move(term));
  }

  validate_instance(inst);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string render_instance(const Instance& inst) {
  ordered_json doc;
  doc["dimension"] = inst.dimension;
  doc["functions"] = ordered_json::array();
  for (const auto& f : inst.functions) {
    ordered_json fj;
    fj["arity"] = f.arity;
    fj["pieces"] = ordered_json::array();
    for (const auto& piece : f.pieces) {
      ordered_json pj;
      pj["constraints"] = ordered_json::array();
      for (const auto& c : piece.guard) {
        ordered_json cj;
        cj["poly"] = write_poly(c.poly);
        cj["rel"] = relation_token(c.rel);
        pj["constraints"].push_back(std::move(cj));
      }
      pj["value"] = write_poly(piece.value);
      fj["pieces"].push_back(std::move(pj));
    }
    doc["functions"].push_back(std::move(fj));
  }
  doc["terms"] = ordered_json::array();
  for (const auto& t : inst.terms) {
    ordered_json tj;
    tj["function"] = t.function_index;
    tj["scope"] = t.scope;
    doc["terms"].push_back(std::move(tj));
  }
  return doc.dump(2) + "\n";
}

std::vector<DisjointnessViolation> validate_disjointness(const Instance& inst) {
  std::vector<DisjointnessViolation> out;
  for (std::size_t i = 0; i < inst.functions.size(); ++i) {
    const PLCostFunction& f = inst.functions[i];
    for (std::size_t a = 0; a < f.pieces.size(); ++a) {
      for (std::size_t b = a + 1; b < f.pieces.size(); ++b) {
        MixedSystem sys(f.arity);
        sys.add_all(f.pieces[a].guard);
        sys.add_all(f.pieces[b].guard);
        if (auto point = feasible_point(sys)) out.push_back({i, a, b, std::move(*point)});
      }
    }
  }
  return out;
}

std::string format_result(const SolveResult& result) {
  std::string s = "value = " + result.value.to_string();
  s += result.attained ? " (minimum, attained)" : " (infimum, not attained)";
  return s;
}

Point parse_point(std::string_view text) {
  Point x;
  if (text.empty()) return x;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    x.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return x;
}

std::string format_point(std::span<const Rational> x) {
  std::string s = "(";
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j > 0) s += ", ";
    s += to_string(x[j]);
  }
  return s + ")";
}

}  // namespace plvcsp
