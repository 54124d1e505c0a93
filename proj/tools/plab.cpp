// This file is part of pointlike-lab, a workbench for pointlike sets of
// finite semigroups.
//
// Copyright 2026 the pointlike-lab authors
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

// plab: command line front end.  Machine-readable JSON goes to standard
// output, a short human summary to standard error.  Exit codes: 0 success,
// 1 domain or validation error (with a structured JSON error object on
// standard output), 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pointlike/complex.hpp"
#include "pointlike/enumerate.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/io.hpp"
#include "pointlike/laws.hpp"
#include "pointlike/modulus.hpp"
#include "pointlike/pointlikes.hpp"
#include "pointlike/relmorph.hpp"
#include "pointlike/semigroup.hpp"

namespace {

using pointlike::Complex;
using pointlike::Dedup;
using pointlike::Elem;
using pointlike::Error;
using pointlike::ErrorKind;
using pointlike::Json;
using pointlike::Semigroup;

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json green_json(const Semigroup& s) {
  using pointlike::GreenRelation;
  Json out;
  const std::pair<const char*, GreenRelation> kinds[] = {
      {"r", GreenRelation::R},
      {"l", GreenRelation::L},
      {"j", GreenRelation::J},
      {"h", GreenRelation::H},
  };
  for (const auto& [key, rel] : kinds) {
    out[key] = pointlike::green_partition(s, rel).classes;
  }
  return out;
}

Json pv_predicates_json(const Semigroup& s) {
  using K = pointlike::Pseudovariety::Kind;
  Json out;
  for (K kind :
       {K::Trivial, K::Groups, K::Aperiodic, K::RTrivial, K::LTrivial,
        K::JTrivial, K::Semilattices, K::Bands, K::Commutative, K::Nilpotent,
        K::LeftZero, K::RightZero, K::LocallyTrivial, K::UniqueIdempotent}) {
    pointlike::Pseudovariety v{kind, 0};
    out[pointlike::pv_name(v)] = pointlike::pv_member(v, s);
  }
  return out;
}

int cmd_validate(const std::string& path) {
  Semigroup s = pointlike::load_semigroup(path);
  Json result;
  result["ok"] = true;
  result["order"] = s.order();
  if (!s.labels().empty()) result["labels"] = s.labels();
  emit(pointlike::make_report("validate", Json{{"file", path}},
                              std::move(result)));
  std::cerr << path << ": valid semigroup of order " << s.order() << "\n";
  return 0;
}

int cmd_info(const std::string& path) {
  using pointlike::ElementSetKind;
  using pointlike::SubsemigroupKind;
  Semigroup s = pointlike::load_semigroup(path);
  Json result;
  result["order"] = s.order();
  result["table"] = pointlike::semigroup_json(s)["table"];
  result["idempotents"] =
      pointlike::element_sets(s, ElementSetKind::Idempotents);
  result["regular"] = pointlike::element_sets(s, ElementSetKind::Regular);
  result["group_elements"] =
      pointlike::element_sets(s, ElementSetKind::GroupElements);
  result["green"] = green_json(s);
  result["subgroups"] =
      pointlike::special_subsemigroups(s, SubsemigroupKind::Subgroups);
  result["local_monoids"] =
      pointlike::special_subsemigroups(s, SubsemigroupKind::LocalMonoids);
  result["pseudovarieties"] = pv_predicates_json(s);
  std::cerr << path << ": order " << s.order() << ", "
            << result["idempotents"].size() << " idempotents, "
            << result["green"]["j"].size() << " J-classes\n";
  emit(pointlike::make_report("info", Json{{"file", path}},
                              std::move(result)));
  return 0;
}

int cmd_nerve(const std::string& dom_path, const std::string& cod_path,
              const std::string& graph_path) {
  Semigroup dom = pointlike::load_semigroup(dom_path);
  Semigroup cod = pointlike::load_semigroup(cod_path);
  pointlike::RelMorphism rho = pointlike::parse_relmorph(
      pointlike::load_text(graph_path), dom, cod);
  Complex nerve = pointlike::nerve(rho);
  Json inputs{{"dom", dom_path}, {"cod", cod_path}, {"graph", graph_path}};
  Json result;
  result["graph_size"] = rho.graph.size();
  result["division"] = pointlike::is_division(rho);
  result["nerve"] = pointlike::complex_json(nerve);
  std::cerr << "nerve has " << nerve.face_count() << " faces over a base of "
            << dom.order() << " elements\n";
  emit(pointlike::make_report("nerve", std::move(inputs), std::move(result)));
  return 0;
}

int cmd_modulus(const std::string& expr, const std::string& path) {
  pointlike::ModulusPtr m = pointlike::parse_modulus(expr);
  Semigroup s = pointlike::load_semigroup(path);
  pointlike::SubsetFamily family = pointlike::eval_modulus(*m, s);
  Complex value = pointlike::functor_value(*m, s);
  Json result;
  result["expression"] = pointlike::modulus_to_string(*m);
  result["family"] = pointlike::family_json(family);
  result["value"] = pointlike::complex_json(value);
  if (pointlike::modulus_is_approximate(*m)) result["approximate"] = true;
  std::cerr << "modulus assigns " << family.size()
            << " subsets; induced complex has " << value.face_count()
            << " faces\n";
  emit(pointlike::make_report(
      "modulus", Json{{"expression", expr}, {"file", path}},
      std::move(result)));
  return 0;
}

int cmd_complete(const std::string& expr, const std::string& path) {
  pointlike::ModulusPtr m = pointlike::parse_modulus(expr);
  Semigroup s = pointlike::load_semigroup(path);
  pointlike::CompletionResult comp = pointlike::monad_completion(*m, s);
  Json result;
  result["expression"] = pointlike::modulus_to_string(*m);
  result["value"] = pointlike::complex_json(comp.value);
  result["levels"] = comp.levels;
  result["trace"] = comp.trace;
  if (pointlike::modulus_is_approximate(*m)) result["approximate"] = true;
  std::cerr << "completion reached a fixpoint after " << comp.levels
            << " level(s) with " << comp.value.face_count() << " faces\n";
  emit(pointlike::make_report(
      "complete", Json{{"expression", expr}, {"file", path}},
      std::move(result)));
  return 0;
}

int cmd_points(const std::string& expr, const std::string& path) {
  pointlike::ModulusPtr m = pointlike::parse_modulus(expr);
  Semigroup s = pointlike::load_semigroup(path);
  bool member = pointlike::points_member(*m, s);
  Json result;
  result["member"] = member;
  if (pointlike::modulus_is_approximate(*m)) result["approximate"] = true;
  std::cerr << path << (member ? " is" : " is not")
            << " a points-semigroup of " << pointlike::modulus_to_string(*m)
            << "\n";
  emit(pointlike::make_report(
      "points", Json{{"expression", expr}, {"file", path}},
      std::move(result)));
  return 0;
}

int cmd_oracle(const std::string& pv_token, int bound,
               const std::string& path) {
  pointlike::Pseudovariety v = pointlike::parse_pv(pv_token);
  Semigroup s = pointlike::load_semigroup(path);
  pointlike::OracleResult res = pointlike::oracle_pointlikes(s, v, bound);
  Json result;
  result["upper"] = pointlike::complex_json(res.value);
  result["bound"] = res.codomain_bound;
  result["codomains_used"] = res.codomains_used;
  result["graphs_intersected"] = res.graphs_intersected;
  result["approximate"] = true;  // an upper bound, never exact by itself
  result["witness"] = res.witness ? pointlike::relmorph_json(*res.witness)
                                  : Json(nullptr);
  std::cerr << "upper bound with "
            << result["upper"]["max_faces"].size() << " max faces from "
            << res.graphs_intersected << " graphs into "
            << res.codomains_used << " codomains\n";
  emit(pointlike::make_report(
      "oracle",
      Json{{"pv", pv_token}, {"bound", bound}, {"file", path}},
      std::move(result)));
  return 0;
}

int cmd_certify(const std::string& pv_token, const std::string& mod_expr,
                int bound, const std::string& path) {
  pointlike::Pseudovariety v = pointlike::parse_pv(pv_token);
  pointlike::ModulusPtr m = pointlike::parse_modulus(mod_expr);
  Semigroup s = pointlike::load_semigroup(path);
  pointlike::Certificate cert =
      pointlike::certify_exact(s, v, std::move(m), bound);
  Json result;
  result["exact"] = cert.exact;
  result["lower"] = pointlike::complex_json(cert.lower);
  result["upper"] = pointlike::complex_json(cert.upper.value);
  if (cert.exact) result["value"] = result["upper"];
  std::cerr << (cert.exact ? "exact: squeeze closed, the value is pinned"
                           : "not exact: lower and upper bounds differ")
            << "\n";
  emit(pointlike::make_report(
      "certify",
      Json{{"pv", pv_token},
           {"modulus", mod_expr},
           {"bound", bound},
           {"file", path}},
      std::move(result)));
  return 0;
}

int cmd_enumerate(int order, const std::string& dedup_token,
                  const std::string& filter_token, bool emit_tables) {
  Dedup dedup = Dedup::UpToIso;
  if (dedup_token == "raw") {
    dedup = Dedup::Raw;
  } else if (dedup_token == "iso") {
    dedup = Dedup::UpToIso;
  } else if (dedup_token == "iso-anti") {
    dedup = Dedup::UpToIsoAntiIso;
  } else {
    throw Error(ErrorKind::ParseError,
                "unknown dedup mode '" + dedup_token + "'");
  }
  std::optional<pointlike::Pseudovariety> filter;
  if (!filter_token.empty()) filter = pointlike::parse_pv(filter_token);
  std::uint64_t count = 0;
  Json tables = Json::array();
  pointlike::enumerate_semigroups(order, dedup, [&](const Semigroup& s) {
    if (filter && !pv_member(*filter, s)) return true;
    ++count;
    if (emit_tables) tables.push_back(s.table());
    return true;
  });
  Json inputs{{"order", order}, {"dedup", dedup_token}};
  if (!filter_token.empty()) inputs["filter"] = filter_token;
  Json result;
  result["count"] = count;
  if (emit_tables) result["tables"] = std::move(tables);
  std::cerr << count << " semigroups of order " << order << " (" << dedup_token
            << (filter_token.empty() ? "" : ", filter " + filter_token)
            << ")\n";
  emit(pointlike::make_report("enumerate", std::move(inputs),
                              std::move(result)));
  return 0;
}

int cmd_check_laws(int order, const std::string& suite_name) {
  const std::vector<pointlike::LawSuite>& suites = pointlike::law_suites();
  if (!suite_name.empty()) {
    bool known = false;
    for (const auto& s : suites) known = known || s.name == suite_name;
    if (!known) {
      throw Error(ErrorKind::ParseError,
                  "unknown suite '" + suite_name + "'");
    }
  }
  Json verdicts = Json::array();
  bool all_ok = true;
  for (const pointlike::LawSuite& suite : suites) {
    if (!suite_name.empty() && suite.name != suite_name) continue;
    pointlike::LawResult r = pointlike::run_law_suite(suite, order);
    Json v;
    v["name"] = r.suite;
    v["order"] = r.order;
    v["cases"] = r.cases;
    v["failures"] = r.failures;
    if (!r.notes.empty()) v["notes"] = r.notes;
    verdicts.push_back(std::move(v));
    std::cerr << (r.ok() ? "ok   " : "FAIL ") << suite.name << " (order "
              << r.order << ", " << r.cases << " cases";
    if (!r.ok()) std::cerr << ", " << r.failures << " failures";
    std::cerr << ")\n";
    all_ok = all_ok && r.ok();
  }
  Json inputs{{"order", order}};
  if (!suite_name.empty()) inputs["suite"] = suite_name;
  Json result;
  result["ok"] = all_ok;
  result["suites"] = std::move(verdicts);
  emit(pointlike::make_report("check-laws", std::move(inputs),
                              std::move(result)));
  return all_ok ? 0 : 1;
}

int cmd_reverse_check(const std::string& pv_token, int bound,
                      const std::string& path) {
  pointlike::Pseudovariety v = pointlike::parse_pv(pv_token);
  Semigroup s = pointlike::load_semigroup(path);
  pointlike::OracleResult fwd =
      pointlike::oracle_pointlikes(s, pointlike::reverse_pseudovariety(v),
                                   bound);
  pointlike::OracleResult rev =
      pointlike::oracle_pointlikes(pointlike::reverse(s), v, bound);
  bool ok = fwd.value.faces() == rev.value.faces();
  Json result;
  result["ok"] = ok;
  result["value"] = pointlike::complex_json(fwd.value);
  result["reversed_value"] = pointlike::complex_json(rev.value);
  std::cerr << (ok ? "transfer holds: both sides agree"
                   : "TRANSFER VIOLATION: the two sides differ")
            << "\n";
  emit(pointlike::make_report(
      "reverse-check",
      Json{{"pv", pv_token}, {"bound", bound}, {"file", path}},
      std::move(result)));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pointlike-lab: pointlike sets of finite semigroups at desk scale"};
  app.require_subcommand(1);

  std::string file, dom_path, cod_path, graph_path;
  std::string expr, pv_token, mod_expr, dedup_token = "iso", filter_token;
  std::string suite_name;
  int bound = 3, order = 3, enum_order = 0;
  bool emit_tables = false;

  CLI::App* validate = app.add_subcommand(
      "validate", "parse a .sgp file and check the table");
  validate->add_option("file", file, "semigroup file")->required();

  CLI::App* info = app.add_subcommand(
      "info", "structure report: Green classes, idempotents, predicates");
  info->add_option("file", file, "semigroup file")->required();

  CLI::App* nerve = app.add_subcommand(
      "nerve", "nerve of a relational morphism given by a .rel file");
  nerve->add_option("--dom", dom_path, "domain .sgp file")->required();
  nerve->add_option("--cod", cod_path, "codomain .sgp file")->required();
  nerve->add_option("--graph", graph_path, "graph .rel file")->required();

  CLI::App* modulus = app.add_subcommand(
      "modulus", "evaluate a modulus expression on a semigroup");
  modulus->add_option("expr", expr, "modulus expression")->required();
  modulus->add_option("file", file, "semigroup file")->required();

  CLI::App* complete = app.add_subcommand(
      "complete", "iterate the induced complex to its union-closed fixpoint");
  complete->add_option("expr", expr, "modulus expression")->required();
  complete->add_option("file", file, "semigroup file")->required();

  CLI::App* points = app.add_subcommand(
      "points", "test whether the modulus assigns only singletons");
  points->add_option("expr", expr, "modulus expression")->required();
  points->add_option("file", file, "semigroup file")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "upper bound for pointlikes by bounded codomain search");
  oracle->add_option("--pv", pv_token, "pseudovariety name")->required();
  oracle->add_option("--bound", bound, "codomain order bound")
      ->default_val(3);
  oracle->add_option("file", file, "semigroup file")->required();

  CLI::App* certify = app.add_subcommand(
      "certify", "squeeze a completion lower bound against the oracle");
  certify->add_option("--pv", pv_token, "pseudovariety name")->required();
  certify->add_option("--modulus", mod_expr, "modulus expression")
      ->required();
  certify->add_option("--bound", bound, "codomain order bound")
      ->default_val(3);
  certify->add_option("file", file, "semigroup file")->required();

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "count or list semigroups of a given order");
  enumerate->add_option("--order", enum_order, "semigroup order")->required();
  enumerate->add_option("--dedup", dedup_token, "raw, iso, or iso-anti")
      ->default_val("iso");
  enumerate->add_option("--filter", filter_token,
                        "keep only members of this pseudovariety");
  enumerate->add_flag("--emit", emit_tables, "include tables in the output");

  CLI::App* check_laws = app.add_subcommand(
      "check-laws", "run the algebraic property suites");
  check_laws->add_option("--order", order, "universe order bound")
      ->default_val(3);
  check_laws->add_option("--suite", suite_name, "run a single named suite");

  CLI::App* reverse_check = app.add_subcommand(
      "reverse-check", "compare pointlike bounds across reversal");
  reverse_check->add_option("--pv", pv_token, "pseudovariety name")
      ->required();
  reverse_check->add_option("--bound", bound, "codomain order bound")
      ->default_val(3);
  reverse_check->add_option("file", file, "semigroup file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*info) return cmd_info(file);
    if (*nerve) return cmd_nerve(dom_path, cod_path, graph_path);
    if (*modulus) return cmd_modulus(expr, file);
    if (*complete) return cmd_complete(expr, file);
    if (*points) return cmd_points(expr, file);
    if (*oracle) return cmd_oracle(pv_token, bound, file);
    if (*certify) return cmd_certify(pv_token, mod_expr, bound, file);
    if (*enumerate) {
      return cmd_enumerate(enum_order, dedup_token, filter_token,
                           emit_tables);
    }
    if (*check_laws) return cmd_check_laws(order, suite_name);
    if (*reverse_check) return cmd_reverse_check(pv_token, bound, file);
  } catch (const Error& e) {
    emit(pointlike::error_json(e));
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
    emit(err);
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}
