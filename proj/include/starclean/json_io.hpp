// Copyright 2026 The starclean Authors
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

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "starclean/cleanness.hpp"
#include "starclean/errors.hpp"
#include "starclean/ring_spec.hpp"
#include "starclean/structure.hpp"
#include "starclean/theorems.hpp"

namespace starclean {

inline constexpr std::string_view kToolName = "starclean";
inline constexpr std::string_view kToolVersion = "1.0.0";

/// Auxiliary data as written in a spec file (labels not yet resolved).
struct AuxSpec {
  std::vector<IdealSpec> ideals;
  std::vector<GroupSpec> groups;
  std::vector<std::size_t> truncation_orders;
};

/// Parsed ring spec file.
struct SpecFile {
  std::string name;
  RingSpec construct;
  AuxSpec aux;
};

namespace json_detail {

using nlohmann::json;

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw SpecError(what);
}

inline void allow_keys(const json& j, std::initializer_list<const char*> keys,
                       const std::string& where) {
  expect(j.is_object(), where + " must be an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    expect(allowed.count(it.key()) > 0,
           "unexpected key '" + it.key() + "' in " + where);
}

inline const json& require(const json& j, const char* key,
                           const std::string& where) {
  expect(j.contains(key), where + " is missing '" + key + "'");
  return j.at(key);
}

inline std::size_t positive(const json& j, const std::string& what) {
  expect(j.is_number_integer() && j.get<long long>() >= 1,
         what + " must be a positive integer");
  return j.get<std::size_t>();
}

/// Element labels may be written as strings or as bare integers.
inline std::string label_of(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw SpecError(what + " must be an element label");
}

inline MapSpec parse_map(const json& d, const std::string& where) {
  MapSpec map;
  if (d.contains("permutation")) {
    const json& p = d.at("permutation");
    expect(p.is_array(), where + ".permutation must be an array");
    for (const auto& x : p) {
      expect(x.is_number_integer() && x.get<long long>() >= 0,
             where + ".permutation entries must be indices");
      map.indices.push_back(x.get<Element>());
    }
  } else if (d.contains("map")) {
    const json& m = d.at("map");
    expect(m.is_object(), where + ".map must be an object of labels");
    for (auto it = m.begin(); it != m.end(); ++it)
      map.by_label.emplace_back(it.key(), label_of(it.value(), where + ".map"));
  } else {
    throw SpecError(where + " needs 'permutation' or 'map'");
  }
  return map;
}

inline StarDescriptor parse_star(const json& d, const std::string& where) {
  StarDescriptor star;
  json obj = d.is_string() ? json{{"kind", d}} : d;
  allow_keys(obj, {"kind", "permutation", "map"}, where);
  const json& kind = require(obj, "kind", where);
  expect(kind.is_string(), where + ".kind must be a string");
  const std::string k = kind.get<std::string>();
  using K = StarDescriptor::Kind;
  if (k == "natural") star.kind = K::Natural;
  else if (k == "identity") star.kind = K::Identity;
  else if (k == "swap") star.kind = K::Swap;
  else if (k == "componentwise") star.kind = K::Componentwise;
  else if (k == "transpose_star") star.kind = K::TransposeStar;
  else if (k == "coefficientwise") star.kind = K::Coefficientwise;
  else if (k == "group_inverse_star") star.kind = K::GroupInverseStar;
  else if (k == "explicit") {
    star.kind = K::Explicit;
    star.map = parse_map(obj, where);
  } else {
    throw SpecError("unknown involution kind '" + k + "'");
  }
  if (star.kind != K::Explicit)
    expect(!obj.contains("permutation") && !obj.contains("map"),
           where + ": only explicit involutions take a map");
  return star;
}

inline GroupSpec parse_group(const json& g, const std::string& where,
                             std::size_t depth = 0) {
  expect(depth < kMaxSpecDepth, where + " is nested too deeply");
  allow_keys(g, {"type", "n", "factors"}, where);
  const json& type = require(g, "type", where);
  expect(type.is_string(), where + ".type must be a string");
  GroupSpec spec;
  if (type == "cyclic") {
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.n = positive(require(g, "n", where), where + ".n");
  } else if (type == "direct_product") {
    spec.kind = GroupSpec::Kind::DirectProduct;
    const json& f = require(g, "factors", where);
    expect(f.is_array() && !f.empty(), where + ".factors must be nonempty");
    for (const auto& x : f)
      spec.factors.push_back(parse_group(x, where + ".factors[]", depth + 1));
  } else {
    throw SpecError("unknown group type '" + type.get<std::string>() + "'");
  }
  return spec;
}

inline IdealSpec parse_ideal(const json& j, const std::string& where) {
  IdealSpec ideal;
  if (j.is_string()) {
    expect(j == "jacobson", where + " must be \"jacobson\" or an object");
    ideal.jacobson = true;
    return ideal;
  }
  allow_keys(j, {"generators"}, where);
  const json& gens = require(j, "generators", where);
  expect(gens.is_array(), where + ".generators must be an array");
  for (const auto& g : gens) ideal.generators.push_back(label_of(g, where));
  return ideal;
}

inline std::vector<std::vector<Element>> parse_table(const json& t,
                                                     const std::string& where) {
  expect(t.is_array(), where + " must be an array of rows");
  std::vector<std::vector<Element>> rows;
  for (const auto& row : t) {
    expect(row.is_array(), where + " rows must be arrays");
    std::vector<Element> r;
    for (const auto& x : row) {
      expect(x.is_number_integer() && x.get<long long>() >= 0,
             where + " entries must be element indices");
      r.push_back(x.get<Element>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

inline RingSpec parse_node(const json& j, const std::string& where,
                           std::size_t depth) {
  expect(depth < kMaxSpecDepth,
         "construction nested deeper than " + std::to_string(kMaxSpecDepth));
  expect(j.is_object(), where + " must be an object");
  const json& type = require(j, "type", where);
  expect(type.is_string(), where + ".type must be a string");
  const std::string tag = type.get<std::string>();
  RingSpec spec;
  using T = RingSpec::Tag;
  auto base = [&]() {
    spec.children.push_back(
        parse_node(require(j, "base", where), where + ".base", depth + 1));
  };
  if (tag == "modular") {
    allow_keys(j, {"type", "n", "involution"}, where);
    spec.tag = T::Modular;
    spec.n = positive(require(j, "n", where), where + ".n");
  } else if (tag == "product") {
    allow_keys(j, {"type", "factors", "involution"}, where);
    spec.tag = T::Product;
    const json& f = require(j, "factors", where);
    expect(f.is_array() && f.size() >= 2,
           where + ".factors needs at least two rings");
    for (const auto& x : f)
      spec.children.push_back(parse_node(x, where + ".factors[]", depth + 1));
  } else if (tag == "matrix") {
    allow_keys(j, {"type", "base", "k", "upper_triangular", "involution"},
               where);
    spec.tag = T::Matrix;
    base();
    spec.n = positive(require(j, "k", where), where + ".k");
    if (j.contains("upper_triangular")) {
      expect(j.at("upper_triangular").is_boolean(),
             where + ".upper_triangular must be boolean");
      spec.upper_triangular = j.at("upper_triangular").get<bool>();
    }
  } else if (tag == "poly_quotient") {
    allow_keys(j, {"type", "base", "modulus", "involution"}, where);
    spec.tag = T::PolyQuotient;
    base();
    const json& m = require(j, "modulus", where);
    expect(m.is_array(), where + ".modulus must be an array of labels");
    for (const auto& c : m) spec.modulus.push_back(label_of(c, where + ".modulus"));
  } else if (tag == "trivial_extension") {
    allow_keys(j, {"type", "base", "sigma", "involution"}, where);
    spec.tag = T::TrivialExtension;
    base();
    json sigma = require(j, "sigma", where);
    if (sigma.is_string()) sigma = json{{"kind", sigma}};
    allow_keys(sigma, {"kind", "permutation", "map"}, where + ".sigma");
    const json& kind = require(sigma, "kind", where + ".sigma");
    if (kind == "identity") {
      spec.sigma.kind = SigmaSpec::Kind::Identity;
    } else if (kind == "swap") {
      spec.sigma.kind = SigmaSpec::Kind::Swap;
    } else if (kind == "explicit") {
      spec.sigma.kind = SigmaSpec::Kind::Explicit;
      spec.sigma.map = parse_map(sigma, where + ".sigma");
    } else {
      throw SpecError(where + ".sigma.kind must be identity, swap or explicit");
    }
  } else if (tag == "group_ring") {
    allow_keys(j, {"type", "base", "group", "involution"}, where);
    spec.tag = T::GroupRing;
    base();
    spec.group = parse_group(require(j, "group", where), where + ".group");
  } else if (tag == "gaussian") {
    allow_keys(j, {"type", "base", "involution"}, where);
    spec.tag = T::Gaussian;
    base();
  } else if (tag == "truncated_series") {
    allow_keys(j, {"type", "base", "n", "involution"}, where);
    spec.tag = T::TruncatedSeries;
    base();
    spec.n = positive(require(j, "n", where), where + ".n");
  } else if (tag == "quotient") {
    allow_keys(j, {"type", "base", "ideal", "involution"}, where);
    spec.tag = T::Quotient;
    base();
    spec.ideal = parse_ideal(require(j, "ideal", where), where + ".ideal");
  } else if (tag == "literal_tables") {
    allow_keys(j, {"type", "labels", "add", "mul", "zero", "one", "involution"},
               where);
    spec.tag = T::LiteralTables;
    const json& labels = require(j, "labels", where);
    expect(labels.is_array() && !labels.empty(),
           where + ".labels must be a nonempty array");
    for (const auto& l : labels)
      spec.literal.labels.push_back(label_of(l, where + ".labels"));
    spec.literal.add = parse_table(require(j, "add", where), where + ".add");
    spec.literal.mul = parse_table(require(j, "mul", where), where + ".mul");
    spec.literal.zero = label_of(require(j, "zero", where), where + ".zero");
    spec.literal.one = label_of(require(j, "one", where), where + ".one");
  } else {
    throw SpecError("unknown constructor type '" + tag + "'");
  }
  if (j.contains("involution"))
    spec.star = parse_star(j.at("involution"), where + ".involution");
  return spec;
}

}  // namespace json_detail

inline SpecFile parse_spec_json(const nlohmann::json& doc) {
  using namespace json_detail;
  allow_keys(doc, {"name", "construct", "involution", "aux"}, "spec file");
  const json& name = require(doc, "name", "spec file");
  expect(name.is_string() && !name.get<std::string>().empty(),
         "name must be a nonempty string");
  SpecFile file;
  file.name = name.get<std::string>();
  file.construct = parse_node(require(doc, "construct", "spec file"),
                              "construct", 0);
  const json& inv = require(doc, "involution", "spec file");
  if (doc.at("construct").contains("involution"))
    throw SpecError("root involution belongs at the top level only");
  file.construct.star = parse_star(inv, "involution");
  if (doc.contains("aux")) {
    const json& aux = doc.at("aux");
    allow_keys(aux, {"ideals", "groups", "truncation_orders"}, "aux");
    if (aux.contains("ideals")) {
      expect(aux.at("ideals").is_array(), "aux.ideals must be an array");
      for (const auto& i : aux.at("ideals"))
        file.aux.ideals.push_back(parse_ideal(i, "aux.ideals[]"));
    }
    if (aux.contains("groups")) {
      expect(aux.at("groups").is_array(), "aux.groups must be an array");
      for (const auto& g : aux.at("groups"))
        file.aux.groups.push_back(parse_group(g, "aux.groups[]"));
    }
    if (aux.contains("truncation_orders")) {
      expect(aux.at("truncation_orders").is_array(),
             "aux.truncation_orders must be an array");
      for (const auto& n : aux.at("truncation_orders")) {
        std::size_t v = positive(n, "aux.truncation_orders[]");
        expect(v >= 2, "aux.truncation_orders entries must be at least 2");
        file.aux.truncation_orders.push_back(v);
      }
    }
  }
  return file;
}

inline SpecFile parse_spec_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_spec_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  }
}

inline SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw SpecError("cannot read spec file '" + path + "'");
  return parse_spec_text(buffer.str());
}

/// Constructs the ring and resolves the auxiliary data against it. A
/// group-ring root also contributes its own (base, G) decomposition.
inline CorpusEntry load_entry(const SpecFile& file,
                              const Limits& limits = default_limits()) {
  StarRing S = construct(file.construct, limits);
  Aux aux;
  for (const auto& ideal : file.aux.ideals) {
    ElementSet members = detail::resolve_ideal(S, ideal);
    if (auto x = star_escape(S, members)) throw NotStarIdeal(*x);
    aux.ideals.push_back(std::move(members));
  }
  for (const auto& g : file.aux.groups) aux.groups.push_back(construct_group(g));
  aux.truncation_orders = file.aux.truncation_orders;
  if (file.construct.tag == RingSpec::Tag::GroupRing) {
    aux.group_rings.push_back(
        {construct(file.construct.children.front(), limits),
         construct_group(file.construct.group)});
  }
  return CorpusEntry{file.name, std::move(S), std::move(aux)};
}

// ---------------------------------------------------------------------------
// Reports

inline nlohmann::json labels_json(const FiniteRing& R, const ElementSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (Element x : set) out.push_back(R.label(x));
  return out;
}

inline nlohmann::json to_json(const StructureFlags& f) {
  return {{"abelian", f.abelian},
          {"boolean_ring", f.boolean_ring},
          {"star_boolean", f.star_boolean},
          {"local", f.local},
          {"regular", f.regular},
          {"star_regular", f.star_regular},
          {"two_in_radical", f.two_in_radical},
          {"center_plus_radical_is_all", f.center_plus_radical_is_all},
          {"directly_finite", f.directly_finite}};
}

inline nlohmann::json to_json(const VerificationResult& r) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& c : r.clauses)
    clauses.push_back({{"name", c.name}, {"value", c.value}});
  return {{"id", std::string(statement_code(r.statement))},
          {"ring", r.ring},
          {"summary", std::string(statement_summary(r.statement))},
          {"clauses", clauses},
          {"consistent", r.consistent},
          {"vacuous", r.vacuous},
          {"witness", r.witness ? nlohmann::json(*r.witness) : nlohmann::json()}};
}

inline nlohmann::json to_json(const FiniteRing& R, const DecisionReport& d) {
  nlohmann::json out{{"holds", d.holds}};
  if (d.first_failure) {
    out["failing_element"] = R.label(d.first_failure->element);
    out["witness_count"] = d.first_failure->witness_count;
  } else {
    out["failing_element"] = nullptr;
    out["witness_count"] = nullptr;
  }
  if (!d.failures.empty()) {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& f : d.failures)
      all.push_back({{"element", R.label(f.element)},
                     {"witness_count", f.witness_count}});
    out["failures"] = all;
  }
  return out;
}

inline nlohmann::json to_json(const CorpusReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : report.errors)
    errors.push_back({{"ring", e.ring}, {"message", e.message}});
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"summary",
           {{"consistent", report.consistent},
            {"vacuous", report.vacuous},
            {"inconsistent", report.inconsistent},
            {"errors", report.errors.size()},
            {"rows", report.results.size()}}},
          {"results", results},
          {"errors", errors}};
}

/// Full analysis document for one spec: invariants, every variant decision,
/// and every statement.
inline nlohmann::json analysis_json(const CorpusEntry& entry, bool exhaustive,
                                    const HarnessOptions& options = {}) {
  const StarRing& S = entry.ring;
  const FiniteRing& R = S.ring();
  const Ideal J = jacobson_radical(S);
  const Ideal P = prime_radical(S);
  const ElementSet U = units(R);
  const ElementSet E = idempotents(R);
  const ElementSet Pr = projections(S);
  const ElementSet C = center_elements(R);
  nlohmann::json maximal = nlohmann::json::array();
  for (const auto& M : maximal_ideals(R, options.limits))
    maximal.push_back(labels_json(R, M.members));
  nlohmann::json star_map = nlohmann::json::object();
  for (Element x = 0; x < R.order(); ++x) star_map[R.label(x)] = R.label(S.star(x));

  nlohmann::json ring{
      {"name", entry.label},
      {"order", R.order()},
      {"labels", R.labels()},
      {"zero", R.label(R.zero())},
      {"one", R.label(R.one())},
      {"commutative", R.is_commutative()},
      {"involution", star_map},
      {"flags", to_json(classify_flags(S))},
      {"jacobson_radical", labels_json(R, J.members)},
      {"radical_size", J.size()},
      {"radical_star_closed", J.star_closed},
      {"prime_radical", labels_json(R, P.members)},
      {"units", labels_json(R, U)},
      {"unit_count", U.size()},
      {"idempotents", labels_json(R, E)},
      {"idempotent_count", E.size()},
      {"projections", labels_json(R, Pr)},
      {"projection_count", Pr.size()},
      {"center", labels_json(R, C)},
      {"maximal_ideals", maximal}};

  CleanContext ctx(S);
  nlohmann::json decisions = nlohmann::json::object();
  for (Variant v : kAllVariants)
    decisions[std::string(variant_name(v))] =
        to_json(R, decide(ctx, v, exhaustive));

  StatementVerifier verifier(S, entry.label,
                             complete_aux(S, entry.aux, options), options);
  nlohmann::json statements = nlohmann::json::array();
  for (StatementId id : kAllStatements)
    statements.push_back(to_json(verifier.verify(id)));

  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"ring", ring},
          {"decisions", decisions},
          {"statements", statements}};
}

}  // namespace starclean
