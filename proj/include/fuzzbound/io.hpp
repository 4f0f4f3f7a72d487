/*
 * Copyright 2026 The fuzzbound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file io.hpp
 * @brief JSON documents for automata, relations, results and reports.
 *
 * Automaton:
 *   { "alphabet": ["s"], "states": ["u","v"], "initial": {"u": 1.0},
 *     "terminal": {"v": 1.0},
 *     "transitions": [{"from": "u", "symbol": "s", "to": "v", "degree": 0.4}] }
 *
 * Relation (omitted entries are 0):
 *   { "rows": 2, "cols": 2, "entries": [[0, 0, 1.0], [1, 1, 0.4]] }
 *
 * Written degrees are rounded to 12 significant digits so output is
 * byte-stable across runs.
 */
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzbound/automata.hpp"
#include "fuzzbound/dbsim.hpp"
#include "fuzzbound/error.hpp"
#include "fuzzbound/fuzzy.hpp"
#include "fuzzbound/oracle.hpp"

namespace fuzzbound::io {

using Json = nlohmann::json;

/// Rounds to 12 significant digits.
inline double rounded(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline Json degree_json(Degree d) { return rounded(d.value()); }

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw ParseError(what, 0); }

inline double number_field(const Json& j, const std::string& ctx) {
  if (!j.is_number()) bad(ctx + ": expected a number");
  return j.get<double>();
}

inline Degree degree_field(const Json& j, const std::string& ctx) {
  const double v = number_field(j, ctx);
  if (!(v >= 0.0 && v <= 1.0)) throw InvalidDegree(ctx + ": degree " + std::to_string(v) + " is outside [0,1]");
  return Degree(v);
}

inline std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) bad(std::string("automaton: missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_string()) bad(std::string("automaton: '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline FuzzySet state_degrees(const Json& j, const char* key, const std::vector<std::string>& states) {
  FuzzySet out(states.size());
  if (!j.contains(key)) return out;
  const Json& m = j.at(key);
  if (!m.is_object()) bad(std::string("automaton: '") + key + "' must be an object");
  for (const auto& [name, value] : m.items()) {
    auto it = std::find(states.begin(), states.end(), name);
    if (it == states.end()) bad(std::string("automaton: '") + key + "' names unknown state '" + name + "'");
    out[static_cast<std::size_t>(it - states.begin())] = degree_field(value, std::string(key) + "." + name);
  }
  return out;
}

}  // namespace detail

inline FuzzyAutomaton automaton_from_json(const Json& j) {
  if (!j.is_object()) detail::bad("automaton: expected a JSON object");
  const auto alphabet = detail::string_list(j, "alphabet");
  const auto states = detail::string_list(j, "states");
  if (states.empty()) throw InvalidAutomaton("automaton: at least one state is required");
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t k = i + 1; k < states.size(); ++k)
      if (states[i] == states[k]) throw InvalidAutomaton("automaton: duplicate state '" + states[i] + "'");

  auto index_of = [](const std::vector<std::string>& v, const std::string& name, const char* what) {
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) detail::bad(std::string("automaton: unknown ") + what + " '" + name + "'");
    return static_cast<std::size_t>(it - v.begin());
  };

  std::vector<Transition> ts;
  if (j.contains("transitions")) {
    if (!j.at("transitions").is_array()) detail::bad("automaton: 'transitions' must be an array");
    for (const auto& t : j.at("transitions")) {
      if (!t.is_object() || !t.contains("from") || !t.contains("symbol") || !t.contains("to") ||
          !t.contains("degree") || !t.at("from").is_string() || !t.at("symbol").is_string() ||
          !t.at("to").is_string()) {
        detail::bad("automaton: transitions need string 'from', 'symbol', 'to' and a numeric 'degree'");
      }
      const double d = detail::number_field(t.at("degree"), "transition degree");
      if (!(d > 0.0 && d <= 1.0)) {
        throw InvalidDegree("automaton: transition degree " + std::to_string(d) + " is outside (0,1]");
      }
      ts.push_back(Transition{index_of(states, t.at("from").get<std::string>(), "state"),
                              index_of(alphabet, t.at("symbol").get<std::string>(), "symbol"),
                              index_of(states, t.at("to").get<std::string>(), "state"), Degree(d)});
    }
  }
  return FuzzyAutomaton(alphabet, states.size(), detail::state_degrees(j, "initial", states),
                        detail::state_degrees(j, "terminal", states), ts, states);
}

inline Json automaton_to_json(const FuzzyAutomaton& a) {
  Json j;
  j["alphabet"] = a.alphabet();
  j["states"] = a.state_names();
  Json init = Json::object(), term = Json::object();
  for (StateId x = 0; x < a.num_states(); ++x) {
    if (a.initial()[x] > Degree::zero()) init[a.state_names()[x]] = degree_json(a.initial()[x]);
    if (a.terminal()[x] > Degree::zero()) term[a.state_names()[x]] = degree_json(a.terminal()[x]);
  }
  j["initial"] = init;
  j["terminal"] = term;
  Json ts = Json::array();
  for (const Transition& t : a.transitions()) {
    ts.push_back({{"from", a.state_names()[t.from]},
                  {"symbol", a.alphabet()[t.symbol]},
                  {"to", a.state_names()[t.to]},
                  {"degree", degree_json(t.degree)}});
  }
  j["transitions"] = ts;
  return j;
}

inline Json relation_to_json(const FuzzyRelation& r) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t k = 0; k < r.cols(); ++k)
      if (r(i, k) > Degree::zero()) entries.push_back({i, k, degree_json(r(i, k))});
  return {{"rows", r.rows()}, {"cols", r.cols()}, {"entries", entries}};
}

/// Relation object plus a dense "matrix" and a "named" view keyed by state
/// names (nonzero entries only).
inline Json relation_to_json(const FuzzyRelation& r, const std::vector<std::string>& row_names,
                             const std::vector<std::string>& col_names) {
  Json j = relation_to_json(r);
  Json matrix = Json::array();
  Json named = Json::object();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < r.cols(); ++k) {
      row.push_back(degree_json(r(i, k)));
      if (r(i, k) > Degree::zero()) named[row_names.at(i)][col_names.at(k)] = degree_json(r(i, k));
    }
    matrix.push_back(row);
  }
  j["matrix"] = matrix;
  j["named"] = named;
  return j;
}

inline FuzzyRelation relation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.at("rows").is_number_unsigned() ||
      !j.at("cols").is_number_unsigned()) {
    detail::bad("relation: expected an object with unsigned 'rows' and 'cols'");
  }
  FuzzyRelation r(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  if (j.contains("entries")) {
    if (!j.at("entries").is_array()) detail::bad("relation: 'entries' must be an array");
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        detail::bad("relation: entries must be [row, col, degree]");
      }
      const auto row = e[0].get<std::size_t>();
      const auto col = e[1].get<std::size_t>();
      if (row >= r.rows() || col >= r.cols()) {
        throw IndexOutOfRange("relation: entry (" + std::to_string(row) + "," + std::to_string(col) +
                              ") is out of range");
      }
      r(row, col) = detail::degree_field(e[2], "relation entry");
    }
  }
  return r;
}

inline Json result_to_json(const DbSimResult& res, const FuzzyAutomaton& a, const FuzzyAutomaton& ap) {
  Json j;
  j["mode"] = std::string(to_string(res.mode));
  j["k"] = res.k;
  j["fixpoint_at"] = res.fixpoint_at ? Json(*res.fixpoint_at) : Json(nullptr);
  j["status"] = std::string(to_string(res.status));
  j["phi_k"] = relation_to_json(res.phi(), a.state_names(), ap.state_names());
  Json norms = Json::array();
  for (Degree d : res.per_step_norms) norms.push_back(degree_json(d));
  j["norms"] = norms;
  j["prefix_norm"] = degree_json(res.prefix_norm());
  if (res.traced) {
    Json trace = Json::array();
    for (const auto& r : res.prefix) trace.push_back(relation_to_json(r));
    j["trace"] = trace;
  }
  return j;
}

inline Json report_to_json(const oracle::LanguageReport& report, const FuzzyAutomaton& a,
                           const FuzzyAutomaton& ap) {
  Json vs = Json::array();
  for (const auto& v : report.violations) {
    Json word = Json::array();
    for (SymbolId s : v.word) word.push_back(a.alphabet().at(s));
    vs.push_back({{"x", v.x ? Json(a.state_names().at(*v.x)) : Json(nullptr)},
                  {"xp", v.xp ? Json(ap.state_names().at(*v.xp)) : Json(nullptr)},
                  {"word", word},
                  {"lhs", degree_json(v.lhs)},
                  {"rhs", degree_json(v.rhs)}});
  }
  return {{"ok", report.ok}, {"violations", vs}};
}

/// Reads and parses a JSON file; I/O and syntax problems raise ParseError.
inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what(), e.byte);
  }
}

inline FuzzyAutomaton load_automaton(const std::string& path) { return automaton_from_json(load_json(path)); }

}  // namespace fuzzbound::io
