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

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "starclean/json_io.hpp"

namespace starclean::cli {

enum ExitCode : int {
  kOk = 0,
  kSpecError = 2,
  kOrderBound = 3,
  kInconsistent = 4,
};

namespace detail {

/// Runs body and converts library errors into the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const OrderBoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kOrderBound;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSpecError;
  }
}

inline std::string set_text(const FiniteRing& R, const ElementSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += R.label(set[i]);
  }
  return out + "}";
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline void write_text(std::ostream& out, const CorpusEntry& entry,
                       bool exhaustive) {
  const StarRing& S = entry.ring;
  const FiniteRing& R = S.ring();
  const StructureFlags f = classify_flags(S);
  out << entry.label << ": order " << R.order()
      << (R.is_commutative() ? ", commutative" : ", noncommutative") << '\n';
  out << "  J(R) = " << set_text(R, jacobson_radical(S).members) << '\n';
  out << "  units: " << units(R).size()
      << "  idempotents: " << idempotents(R).size()
      << "  projections: " << projections(S).size() << '\n';
  out << "  flags: abelian=" << yes_no(f.abelian)
      << " boolean_ring=" << yes_no(f.boolean_ring)
      << " star_boolean=" << yes_no(f.star_boolean)
      << " local=" << yes_no(f.local) << " regular=" << yes_no(f.regular)
      << " star_regular=" << yes_no(f.star_regular)
      << " two_in_radical=" << yes_no(f.two_in_radical)
      << " center_plus_radical_is_all=" << yes_no(f.center_plus_radical_is_all)
      << '\n';
  CleanContext ctx(S);
  for (Variant v : kAllVariants) {
    DecisionReport d = decide(ctx, v, exhaustive);
    out << "  " << variant_name(v) << " = " << yes_no(d.holds);
    if (d.first_failure)
      out << " (fails at " << R.label(d.first_failure->element) << " with "
          << d.first_failure->witness_count << " witnesses)";
    out << '\n';
  }
  StatementVerifier verifier(S, entry.label, complete_aux(S, entry.aux));
  for (StatementId id : kAllStatements) {
    VerificationResult r = verifier.verify(id);
    out << "  " << statement_code(id) << ' '
        << (r.vacuous ? "vacuous" : r.consistent ? "consistent" : "INCONSISTENT");
    if (r.witness) out << " (" << *r.witness << ')';
    out << '\n';
  }
}

inline std::vector<std::filesystem::path> spec_files(
    const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw SpecError("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir, ec))
    if (item.path().extension() == ".json") files.push_back(item.path());
  if (ec) throw SpecError("cannot list '" + dir.string() + "'");
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace detail

inline int cmd_analyze(const std::string& path, bool text, bool exhaustive,
                       std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    CorpusEntry entry = load_entry(load_spec_file(path));
    if (text)
      detail::write_text(out, entry, exhaustive);
    else
      out << analysis_json(entry, exhaustive).dump(2) << '\n';
    return kOk;
  });
}

inline int cmd_verify(const std::string& dir,
                      const std::vector<std::string>& statement_codes,
                      std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    std::vector<StatementId> statements;
    for (const auto& code : statement_codes) {
      auto id = parse_statement(code);
      if (!id) throw SpecError("unknown statement '" + code + "'");
      statements.push_back(*id);
    }
    std::vector<CorpusEntry> corpus;
    for (const auto& file : detail::spec_files(dir)) {
      try {
        corpus.push_back(load_entry(load_spec_file(file.string())));
      } catch (const Error& e) {
        err << file.filename().string() << ": ";
        throw;
      }
    }
    CorpusReport report = run_corpus(corpus, statements);
    out << to_json(report).dump(2) << '\n';
    for (const auto& r : report.results)
      if (!r.consistent && !r.vacuous)
        err << "inconsistent: " << statement_code(r.statement) << " on "
            << r.ring << (r.witness ? " (" + *r.witness + ")" : "") << '\n';
    for (const auto& e : report.errors)
      err << "error: " << e.ring << ": " << e.message << '\n';
    if (report.inconsistent > 0) return kInconsistent;
    return report.errors.empty() ? kOk : kSpecError;
  });
}

inline int cmd_witness(const std::string& path, const std::string& label,
                       const std::string& variant_text, std::ostream& out,
                       std::ostream& err) {
  return detail::guarded(err, [&] {
    auto v = parse_variant(variant_text);
    if (!v) throw SpecError("unknown variant '" + variant_text + "'");
    CorpusEntry entry = load_entry(load_spec_file(path));
    const FiniteRing& R = entry.ring.ring();
    auto a = R.find(label);
    if (!a) throw SpecError("no element labelled '" + label + "'");
    for (const CleanWitness& w : witnesses(entry.ring, *a, *v))
      out << "e=" << R.label(w.companion) << " u=" << R.label(w.complement)
          << " commutes=" << detail::yes_no(w.commutes) << '\n';
    return kOk;
  });
}

inline int cmd_involutions(const std::string& path, std::ostream& out,
                           std::ostream& err) {
  return detail::guarded(err, [&] {
    CorpusEntry entry = load_entry(load_spec_file(path));
    const FiniteRing& R = entry.ring.ring();
    for (const Involution& inv :
         enumerate_involutions(R, default_limits())) {
      StarRing S(R, inv);
      out << '[';
      for (Element x = 0; x < R.order(); ++x)
        out << (x ? "," : "") << inv(x);
      out << "] strongly_J_star_clean="
          << detail::yes_no(decide(S, Variant::StronglyJStarClean).holds)
          << '\n';
    }
    return kOk;
  });
}

}  // namespace starclean::cli
