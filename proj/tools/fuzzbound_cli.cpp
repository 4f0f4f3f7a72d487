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

// fuzzbound: command-line front end.
//
//   fuzzbound dbsim    --left A.json --right B.json --depth K [--trace]
//   fuzzbound dbbisim  --left A.json --right B.json --depth K [--trace]
//   fuzzbound greatest --left A.json --right B.json [--mode sim|bisim] [--max-iters N] [--tol T]
//   fuzzbound check    --left A.json --right B.json --relation R.json --mode sim|bisim|dbsim|dbbisim
//   fuzzbound lang     --left A.json (--word "s s" | --max-len N)
//   fuzzbound lang     --left A.json --right B.json --relation R.json --max-len N [--mode sim|bisim]
//   fuzzbound formula  --left A.json --expr "(s . T)"
//
// Common: --tnorm godel|lukasiewicz|product (default $FUZZBOUND_TNORM, else
// godel), --eps, --output FILE, --config FILE (key: tnorm).
//
// Exit codes: 0 ok, 1 I/O or parse error, 2 semantic mismatch, 3 resource cap.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzbound/fuzzbound.hpp"
#include "fuzzbound/io.hpp"

namespace {

using namespace fuzzbound;
using io::Json;

struct CliConfig {
  std::string tnorm = "godel";
  double eps_cmp = kDefaultEps;
  std::size_t max_iters = 1000;
  double tol = kDefaultEps;
  std::uint64_t word_cap = kDefaultWordCap;
  std::string output;

  std::string left, right, relation, mode, word, expr;
  std::size_t depth = 0;
  std::optional<std::size_t> max_len;
  bool trace = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loads both automata and reorders the right alphabet to match the left one.
std::pair<FuzzyAutomaton, FuzzyAutomaton> load_pair(const CliConfig& c) {
  FuzzyAutomaton a = io::load_automaton(c.left);
  FuzzyAutomaton ap = io::load_automaton(c.right);
  if (a.alphabet() != ap.alphabet()) ap = ap.with_alphabet_order(a.alphabet());
  return {std::move(a), std::move(ap)};
}

// A relation file is a relation object, a result document (phi_k), or for
// prefixes a result document with "trace" / an array of relation objects.
FuzzyRelation load_relation(const std::string& path) {
  const Json j = io::load_json(path);
  if (j.is_object() && j.contains("phi_k")) return io::relation_from_json(j.at("phi_k"));
  return io::relation_from_json(j);
}

std::vector<FuzzyRelation> load_prefix(const std::string& path) {
  const Json j = io::load_json(path);
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("trace")) throw ParseError("'" + path + "': expected a result with \"trace\"", 0);
    arr = &j.at("trace");
  }
  if (!arr->is_array()) throw ParseError("'" + path + "': expected an array of relations", 0);
  std::vector<FuzzyRelation> out;
  for (const auto& r : *arr) out.push_back(io::relation_from_json(r));
  return out;
}

Json state_map(const FuzzyAutomaton& a, const FuzzySet& f) {
  Json out = Json::object();
  for (StateId x = 0; x < a.num_states(); ++x) out[a.state_names()[x]] = io::degree_json(f[x]);
  return out;
}

Json word_json(const FuzzyAutomaton& a, const Word& w) {
  Json out = Json::array();
  for (SymbolId s : w) out.push_back(a.alphabet()[s]);
  return out;
}

Json cmd_depth_bounded(const Structure& l, const CliConfig& c, Mode mode) {
  const auto [a, ap] = load_pair(c);
  const DbSimResult res = mode == Mode::simulation ? compute_dbsim(l, a, ap, c.depth, c.trace)
                                                   : compute_dbbisim(l, a, ap, c.depth, c.trace);
  return io::result_to_json(res, a, ap);
}

Mode parse_mode(const std::string& m) {
  if (m == "sim" || m == "dbsim") return Mode::simulation;
  if (m == "bisim" || m == "dbbisim") return Mode::bisimulation;
  throw Usage("unknown mode '" + m + "'");
}

Json cmd_greatest(const Structure& l, const CliConfig& c) {
  const auto [a, ap] = load_pair(c);
  const DbSimResult res = greatest_fixpoint(l, a, ap, parse_mode(c.mode.empty() ? "sim" : c.mode), c.max_iters,
                                            c.tol, c.trace);
  return io::result_to_json(res, a, ap);
}

Json cmd_check(const Structure& l, const CliConfig& c) {
  const auto [a, ap] = load_pair(c);
  Json out{{"mode", c.mode}};
  if (c.mode == "sim" || c.mode == "bisim") {
    const FuzzyRelation phi = load_relation(c.relation);
    const bool bisim = c.mode == "bisim";
    out["ok"] = bisim ? check_bisim(l, a, ap, phi) : check_sim(l, a, ap, phi);
    out["norm"] = io::degree_json(bisim ? bisim_norm(l, phi, a, ap) : sim_norm(l, phi, a, ap));
  } else if (c.mode == "dbsim" || c.mode == "dbbisim") {
    const auto prefix = load_prefix(c.relation);
    const bool bisim = c.mode == "dbbisim";
    out["ok"] = bisim ? check_dbbisim_prefix(l, a, ap, prefix) : check_dbsim_prefix(l, a, ap, prefix);
    out["prefix_norm"] =
        io::degree_json(dbsim_prefix_norm(l, prefix, a, ap, bisim ? Mode::bisimulation : Mode::simulation));
  } else {
    throw Usage("--mode must be sim, bisim, dbsim or dbbisim");
  }
  return out;
}

Json cmd_lang(const Structure& l, const CliConfig& c) {
  if (!c.right.empty() || !c.relation.empty()) {
    if (c.right.empty() || c.relation.empty() || !c.max_len) {
      throw Usage("language verification needs --right, --relation and --max-len");
    }
    const auto [a, ap] = load_pair(c);
    const FuzzyRelation phi = load_relation(c.relation);
    const Mode mode = parse_mode(c.mode.empty() ? "sim" : c.mode);
    const auto report = mode == Mode::simulation
                            ? oracle::verify_language_preservation(l, a, ap, phi, *c.max_len, c.word_cap)
                            : oracle::verify_language_invariance(l, a, ap, phi, *c.max_len, c.word_cap);
    return io::report_to_json(report, a, ap);
  }

  const FuzzyAutomaton a = io::load_automaton(c.left);
  if (c.max_len) {
    Json words = Json::array();
    for (const auto& [w, d] : language_bounded(l, a, *c.max_len, c.word_cap)) {
      words.push_back({{"word", word_json(a, w)}, {"degree", io::degree_json(d)}});
    }
    return {{"max_len", *c.max_len}, {"words", words}};
  }
  const Word w = parse_word(a, c.word);
  return {{"word", word_json(a, w)}, {"degree", io::degree_json(language_eval(l, a, w))}};
}

Json cmd_formula(const Structure& l, const CliConfig& c) {
  const Formula f = parse_formula(c.expr);
  const FuzzyAutomaton a = io::load_automaton(c.left);
  Json out{{"formula", to_string(f)}, {"depth", formula_depth(f)}, {"values", state_map(a, eval_formula(l, a, f))}};
  if (!c.right.empty()) {
    const FuzzyAutomaton ap = io::load_automaton(c.right);
    out["right_values"] = state_map(ap, eval_formula(l, ap, f));
  }
  return out;
}

void emit(const Json& j, const std::string& output) {
  const std::string text = j.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out || !(out << text)) throw ParseError("cannot write '" + output + "'", 0);
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig c;
  CLI::App app{"Depth-bounded fuzzy simulations and bisimulations between fuzzy automata"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited by subcommands: common options may follow them
  app.set_config("--config", "", "TOML/INI file with defaults (e.g. tnorm = \"product\")");
  app.add_option("--tnorm", c.tnorm, "Residuated structure")
      ->envname("FUZZBOUND_TNORM")
      ->check(CLI::IsMember({"godel", "lukasiewicz", "product"}))
      ->capture_default_str();
  app.add_option("--eps", c.eps_cmp, "Comparison tolerance")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--output", c.output, "Write JSON here instead of stdout");

  auto pair_opts = [&c](CLI::App* sub) {
    sub->add_option("--left", c.left, "Left automaton (JSON)")->required();
    sub->add_option("--right", c.right, "Right automaton (JSON)")->required();
  };

  auto* dbsim = app.add_subcommand("dbsim", "Greatest depth-bounded fuzzy simulation up to --depth");
  auto* dbbisim = app.add_subcommand("dbbisim", "Greatest depth-bounded fuzzy bisimulation up to --depth");
  for (auto* sub : {dbsim, dbbisim}) {
    pair_opts(sub);
    sub->add_option("--depth", c.depth, "Depth k")->required();
    sub->add_flag("--trace", c.trace, "Include phi_0..phi_k");
  }

  auto* greatest = app.add_subcommand("greatest", "Iterate to the greatest fuzzy (bi)simulation");
  pair_opts(greatest);
  greatest->add_option("--mode", c.mode, "sim or bisim")->check(CLI::IsMember({"sim", "bisim"}));
  greatest->add_option("--max-iters", c.max_iters, "Iteration cap")->check(CLI::PositiveNumber)->capture_default_str();
  greatest->add_option("--tol", c.tol, "Convergence tolerance")->check(CLI::NonNegativeNumber);
  greatest->add_flag("--trace", c.trace, "Include every iterate");

  auto* check = app.add_subcommand("check", "Check a relation or prefix against the definitions");
  pair_opts(check);
  check->add_option("--relation", c.relation, "Relation, result or prefix JSON")->required();
  check->add_option("--mode", c.mode, "sim, bisim, dbsim or dbbisim")
      ->required()
      ->check(CLI::IsMember({"sim", "bisim", "dbsim", "dbbisim"}));

  auto* lang = app.add_subcommand("lang", "Evaluate or enumerate the fuzzy language");
  lang->add_option("--left", c.left, "Automaton (JSON)")->required();
  lang->add_option("--right", c.right, "Second automaton, for language verification");
  lang->add_option("--relation", c.relation, "Relation to verify against the languages");
  lang->add_option("--mode", c.mode, "sim or bisim (verification)")->check(CLI::IsMember({"sim", "bisim"}));
  auto* word = lang->add_option("--word", c.word, "Space-separated symbol names");
  auto* max_len = lang->add_option("--max-len", c.max_len, "Enumerate all words up to this length");
  lang->add_option("--word-cap", c.word_cap, "Abort above this many words")->capture_default_str();
  word->excludes(max_len);

  auto* formula = app.add_subcommand("formula", "Evaluate a modal formula on every state");
  formula->add_option("--left", c.left, "Automaton (JSON)")->required();
  formula->add_option("--right", c.right, "Optional second automaton");
  formula->add_option("--expr", c.expr, "Formula, e.g. \"(s . (0.5 -> T))\"")->required();


  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (lang->parsed() && c.word.empty() && !c.max_len && word->count() == 0) {
    std::cerr << "lang: one of --word or --max-len is required\n";
    return 1;
  }

  try {
    const Structure l = Structure::from_name(c.tnorm, c.eps_cmp);
    Json out;
    if (dbsim->parsed()) out = cmd_depth_bounded(l, c, Mode::simulation);
    if (dbbisim->parsed()) out = cmd_depth_bounded(l, c, Mode::bisimulation);
    if (greatest->parsed()) out = cmd_greatest(l, c);
    if (check->parsed()) out = cmd_check(l, c);
    if (lang->parsed()) out = cmd_lang(l, c);
    if (formula->parsed()) out = cmd_formula(l, c);
    emit(out, c.output);
    return 0;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const AlphabetMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSymbol& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DialectError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // ParseError, InvalidDegree, InvalidAutomaton, UnknownStructure
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
