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
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starclean/cleanness.hpp"
#include "starclean/constructors.hpp"
#include "starclean/errors.hpp"
#include "starclean/group.hpp"
#include "starclean/ring.hpp"
#include "starclean/structure.hpp"

namespace starclean {

/// Characterizations of strongly J-*-clean rings checked by the harness.
/// Each id is an executable biconditional (or family of them).
enum class StatementId {
  AbelianJStarClean,        // sJ*c <=> sJc & s*c <=> abelian & J*c
  CenterPlusRadical,        // sJ*c <=> C(R) J*c & R = C(R) + J(R)
  MaximalQuotientsAreZ2,    // sJ*c <=> s*c & R/M = Z2 for all maximal M
  MaximalQuotientsNoTwoUnitSum,
  BooleanModRadical,        // sJ*c <=> R/J Boolean & s*c
  IdempotentsNotTwoUnits,
  LocalCase,
  StarRegularCase,
  SymmetricRadical,         // uniquely clean & a -+ a* in J
  UniquenessEquivalence,    // five-way equivalence
  RadicalOneMinusUnits,     // J = {x | 1 - x unit}
  RadicalNormUnits,         // J = {x | 1 + xx* unit}
  TorsionUnits,
  IdealLifting,
  StarBooleanQuotient,
  PrimeRadicalQuotient,
  GaussianUnits,
  GaussianExtension,
  TruncatedSeries,
  GroupRing,
};

inline constexpr std::array<StatementId, 20> kAllStatements{
    StatementId::AbelianJStarClean,
    StatementId::CenterPlusRadical,
    StatementId::MaximalQuotientsAreZ2,
    StatementId::MaximalQuotientsNoTwoUnitSum,
    StatementId::BooleanModRadical,
    StatementId::IdempotentsNotTwoUnits,
    StatementId::LocalCase,
    StatementId::StarRegularCase,
    StatementId::SymmetricRadical,
    StatementId::UniquenessEquivalence,
    StatementId::RadicalOneMinusUnits,
    StatementId::RadicalNormUnits,
    StatementId::TorsionUnits,
    StatementId::IdealLifting,
    StatementId::StarBooleanQuotient,
    StatementId::PrimeRadicalQuotient,
    StatementId::GaussianUnits,
    StatementId::GaussianExtension,
    StatementId::TruncatedSeries,
    StatementId::GroupRing,
};

/// Stable external identifier used on the command line and in reports.
inline constexpr std::string_view statement_code(StatementId id) {
  constexpr std::array<std::string_view, 20> codes{
      "P2.1", "C2.3", "P2.4", "C2.5", "P2.6", "C2.7", "C2.8",
      "C2.9", "L3.1", "T3.2", "T3.5", "C3.6", "C3.7", "T3.8",
      "C3.9", "C3.10", "L4.1", "P4.2", "P4.3", "P4.4"};
  return codes[static_cast<std::size_t>(id)];
}

inline std::optional<StatementId> parse_statement(std::string_view code) {
  for (StatementId id : kAllStatements)
    if (statement_code(id) == code) return id;
  return std::nullopt;
}

inline constexpr std::string_view statement_summary(StatementId id) {
  switch (id) {
    case StatementId::AbelianJStarClean:
      return "strongly J-*-clean <=> strongly J-clean and strongly *-clean "
             "<=> abelian and J-*-clean";
    case StatementId::CenterPlusRadical:
      return "strongly J-*-clean <=> center is J-*-clean and R = C(R) + J(R)";
    case StatementId::MaximalQuotientsAreZ2:
      return "strongly J-*-clean <=> strongly *-clean and every R/M has two "
             "elements";
    case StatementId::MaximalQuotientsNoTwoUnitSum:
      return "strongly J-*-clean <=> strongly *-clean and 1 is never a sum of "
             "two units in R/M";
    case StatementId::BooleanModRadical:
      return "strongly J-*-clean <=> R/J(R) Boolean and strongly *-clean";
    case StatementId::IdempotentsNotTwoUnits:
      return "strongly J-*-clean <=> strongly *-clean and no nonzero "
             "idempotent is a sum of two units";
    case StatementId::LocalCase:
      return "local rings: strongly J-*-clean <=> strongly J-clean <=> "
             "uniquely clean <=> |R/J(R)| = 2 <=> 1 is not a sum of two units";
    case StatementId::StarRegularCase:
      return "*-regular rings: strongly J-*-clean <=> Boolean";
    case StatementId::SymmetricRadical:
      return "strongly J-*-clean <=> uniquely clean with a - a* in J(R) <=> "
             "uniquely clean with a + a* in J(R)";
    case StatementId::UniquenessEquivalence:
      return "strongly J-*-clean <=> uniquely clean and strongly *-clean <=> "
             "uniquely strongly *-clean <=> uniquely J-*-clean <=> unique "
             "twisted idempotent decomposition";
    case StatementId::RadicalOneMinusUnits:
      return "strongly J-*-clean <=> strongly *-clean and "
             "J(R) = {x | 1 - x unit}";
    case StatementId::RadicalNormUnits:
      return "strongly J-*-clean <=> strongly *-clean, a + a* in J(R), and "
             "J(R) = {x | 1 + xx* unit}";
    case StatementId::TorsionUnits:
      return "strongly J-*-clean <=> strongly *-clean, 2 in J(R), and "
             "U(R/J(R)) torsion";
    case StatementId::IdealLifting:
      return "for a *-ideal I in J(R): strongly J-*-clean <=> R/I strongly "
             "J-*-clean, abelian, idempotents lift modulo I";
    case StatementId::StarBooleanQuotient:
      return "strongly J-*-clean <=> R/J(R) *-Boolean, abelian, idempotents "
             "lift modulo J(R)";
    case StatementId::PrimeRadicalQuotient:
      return "strongly J-*-clean <=> abelian and R/P(R) strongly J-*-clean";
    case StatementId::GaussianUnits:
      return "2 in J(R) => U(R[i]) = {a + bi | a + b unit}";
    case StatementId::GaussianExtension:
      return "R[i] strongly J-*-clean <=> R strongly J-*-clean";
    case StatementId::TruncatedSeries:
      return "R[[x]]/(x^n) strongly J-*-clean <=> R strongly J-*-clean";
    case StatementId::GroupRing:
      return "RG strongly J-*-clean <=> R strongly J-*-clean and G a 2-group";
  }
  return "";
}

struct GroupRingInstance {
  StarRing base;
  FiniteGroup group;
};

/// Statement-specific inputs.
struct Aux {
  /// *-ideals contained in J(R) for the lifting statement.
  std::vector<ElementSet> ideals;
  /// Groups G for which the entry itself is the coefficient ring of RG.
  std::vector<FiniteGroup> groups;
  /// Explicit (base, G) pairs, e.g. the decomposition of a group-ring entry.
  std::vector<GroupRingInstance> group_rings;
  /// Truncation orders n for R[[x]]/(x^n).
  std::vector<std::size_t> truncation_orders;
};

struct HarnessOptions {
  Limits limits = default_limits();
  /// Largest auxiliary ring (extension, group ring, series) built by default.
  std::size_t max_extension_order = 512;
};

/// Fills unset auxiliary data with defaults that stay within the bound:
/// I = J(R); n in {2, 3}; G in {C2, C3}.
inline Aux complete_aux(const StarRing& S, Aux aux,
                        const HarnessOptions& options = {}) {
  const double bound = static_cast<double>(options.max_extension_order);
  const double order = static_cast<double>(S.order());
  if (aux.ideals.empty()) aux.ideals.push_back(jacobson_radical(S.ring()).members);
  if (aux.truncation_orders.empty()) {
    for (std::size_t n : {2u, 3u})
      if (std::pow(order, n) <= bound) aux.truncation_orders.push_back(n);
  }
  if (aux.groups.empty() && aux.group_rings.empty()) {
    for (std::size_t n : {2u, 3u})
      if (std::pow(order, n) <= bound) aux.groups.push_back(make_cyclic_group(n));
  }
  return aux;
}

struct Clause {
  std::string name;
  bool value;
};

struct VerificationResult {
  StatementId statement;
  std::string ring;
  std::vector<Clause> clauses;
  bool consistent = true;
  bool vacuous = false;
  std::optional<std::string> witness;
};

/// Evaluates statements on one star ring, caching shared invariants.
class StatementVerifier {
 public:
  StatementVerifier(StarRing S, std::string label, Aux aux,
                    HarnessOptions options = {})
      : S_(std::move(S)),
        label_(std::move(label)),
        aux_(std::move(aux)),
        options_(options),
        ctx_(S_) {}

  const StarRing& star_ring() const noexcept { return S_; }

  VerificationResult verify(StatementId id) {
    VerificationResult r;
    r.statement = id;
    r.ring = label_;
    switch (id) {
      case StatementId::AbelianJStarClean: {
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly J-clean and strongly *-clean",
            holds(Variant::StronglyJClean) && holds(Variant::StronglyStarClean));
        add(r, "abelian and J-*-clean",
            flags().abelian && holds(Variant::JStarClean));
        all_equal(r);
        break;
      }
      case StatementId::CenterPlusRadical: {
        Center C = center(S_, options_.limits);
        bool center_jsc = decide(C.ring, Variant::JStarClean).holds;
        add(r, "strongly J-*-clean", sjs());
        add(r, "C(R) is J-*-clean", center_jsc);
        add(r, "R = C(R) + J(R)", flags().center_plus_radical_is_all);
        compare(r, 0, center_jsc && flags().center_plus_radical_is_all);
        break;
      }
      case StatementId::MaximalQuotientsAreZ2: {
        bool all_z2 = true;
        for (const auto& M : maximal())
          all_z2 = all_z2 && quotient_ring(R(), M.members, options_.limits)
                                     .ring.order() == 2;
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly *-clean", holds(Variant::StronglyStarClean));
        add(r, "R/M = Z2 for every maximal M", all_z2);
        compare(r, 0, holds(Variant::StronglyStarClean) && all_z2);
        break;
      }
      case StatementId::MaximalQuotientsNoTwoUnitSum: {
        bool none = true;
        for (const auto& M : maximal())
          none = none && !one_is_sum_of_two_units(
                             quotient_ring(R(), M.members, options_.limits).ring);
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly *-clean", holds(Variant::StronglyStarClean));
        add(r, "1 is not a sum of two units in any R/M", none);
        compare(r, 0, holds(Variant::StronglyStarClean) && none);
        break;
      }
      case StatementId::BooleanModRadical: {
        const FiniteRing& Q = radical_quotient().ring;
        bool boolean = idempotents(Q).size() == Q.order();
        add(r, "strongly J-*-clean", sjs());
        add(r, "R/J(R) is Boolean", boolean);
        add(r, "strongly *-clean", holds(Variant::StronglyStarClean));
        compare(r, 0, boolean && holds(Variant::StronglyStarClean));
        break;
      }
      case StatementId::IdempotentsNotTwoUnits: {
        bool none = true;
        for (Element e : ctx_.idempotent_list()) {
          if (e == R().zero()) continue;
          for (Element u = 0; u < R().order() && none; ++u)
            if (R().is_unit(u) && R().is_unit(R().sub(e, u))) none = false;
        }
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly *-clean", holds(Variant::StronglyStarClean));
        add(r, "no nonzero idempotent is a sum of two units", none);
        compare(r, 0, holds(Variant::StronglyStarClean) && none);
        break;
      }
      case StatementId::LocalCase: {
        add(r, "local", flags().local);
        if (!flags().local) {
          vacuous(r, "hypothesis not met (ring is not local)");
          break;
        }
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly J-clean", holds(Variant::StronglyJClean));
        add(r, "uniquely clean", holds(Variant::UniquelyClean));
        add(r, "|R/J(R)| = 2", radical_quotient().ring.order() == 2);
        add(r, "1 is not a sum of two units", !one_is_sum_of_two_units(R()));
        all_equal(r, 1);
        break;
      }
      case StatementId::StarRegularCase: {
        add(r, "*-regular", flags().star_regular);
        if (!flags().star_regular) {
          vacuous(r, "hypothesis not met (ring is not *-regular)");
          break;
        }
        add(r, "strongly J-*-clean", sjs());
        add(r, "Boolean", flags().boolean_ring);
        all_equal(r, 1);
        break;
      }
      case StatementId::SymmetricRadical: {
        bool minus = true, plus = true;
        for (Element a = 0; a < R().order(); ++a) {
          minus = minus && ctx_.in_radical(R().sub(a, S_.star(a)));
          plus = plus && ctx_.in_radical(R().add(a, S_.star(a)));
        }
        bool uc = holds(Variant::UniquelyClean);
        add(r, "strongly J-*-clean", sjs());
        add(r, "uniquely clean and a - a* in J(R) for all a", uc && minus);
        add(r, "uniquely clean and a + a* in J(R) for all a", uc && plus);
        all_equal(r);
        break;
      }
      case StatementId::UniquenessEquivalence: {
        add(r, "strongly J-*-clean", sjs());
        add(r, "uniquely clean and strongly *-clean",
            holds(Variant::UniquelyClean) && holds(Variant::StronglyStarClean));
        add(r, "uniquely strongly *-clean",
            holds(Variant::UniquelyStronglyStarClean));
        add(r, "uniquely J-*-clean", holds(Variant::UniquelyJStarClean));
        add(r, "unique idempotent e: a - e unit, e and e* commute with a, "
               "e - e* in J(R)",
            holds(Variant::CondT32_5));
        all_equal(r);
        if (r.consistent && sjs()) check_companions(r);
        break;
      }
      case StatementId::RadicalOneMinusUnits: {
        bool eq = jacobson().members == one_minus_unit_set(R());
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly *-clean", holds(Variant::StronglyStarClean));
        add(r, "J(R) = {x | 1 - x unit}", eq);
        compare(r, 0, holds(Variant::StronglyStarClean) && eq);
        break;
      }
      case StatementId::RadicalNormUnits: {
        bool plus = true;
        for (Element a = 0; a < R().order(); ++a)
          plus = plus && ctx_.in_radical(R().add(a, S_.star(a)));
        bool eq = jacobson().members == one_plus_norm_unit_set(S_);
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly *-clean", holds(Variant::StronglyStarClean));
        add(r, "a + a* in J(R) for all a", plus);
        add(r, "J(R) = {x | 1 + xx* unit}", eq);
        compare(r, 0, holds(Variant::StronglyStarClean) && plus && eq);
        break;
      }
      case StatementId::TorsionUnits: {
        bool two = flags().two_in_radical;
        bool torsion = unit_group_is_torsion(radical_quotient().ring);
        add(r, "strongly J-*-clean", sjs());
        add(r, "strongly *-clean", holds(Variant::StronglyStarClean));
        add(r, "2 in J(R)", two);
        add(r, "U(R/J(R)) is torsion", torsion);
        compare(r, 0, holds(Variant::StronglyStarClean) && two && torsion);
        if (!r.consistent) r.witness = odd_order_unit(radical_quotient().ring);
        break;
      }
      case StatementId::IdealLifting: {
        if (aux_.ideals.empty())
          throw AuxMissing("ideal-lifting check needs at least one ideal");
        add(r, "strongly J-*-clean", sjs());
        bool consistent = true;
        for (const auto& I : aux_.ideals) {
          for (Element x : I)
            if (!ctx_.in_radical(x))
              throw AuxMissing("auxiliary ideal is not inside J(R)");
          StarRing Q = make_quotient(S_, I, options_.limits);
          bool q = decide(Q, Variant::StronglyJStarClean).holds;
          bool lifts = lifts_idempotents(R(), I);
          std::string tag = "I = " + describe(I) + ": ";
          add(r, tag + "R/I strongly J-*-clean", q);
          add(r, tag + "abelian", flags().abelian);
          add(r, tag + "idempotents lift modulo I", lifts);
          bool rhs = q && flags().abelian && lifts;
          if (rhs != sjs()) {
            consistent = false;
            r.witness = "disagreement for " + tag;
          }
        }
        r.consistent = consistent;
        break;
      }
      case StatementId::StarBooleanQuotient: {
        StarRing Q = make_quotient(S_, jacobson().members, options_.limits);
        bool star_boolean = projections(Q).size() == Q.order();
        bool lifts = lifts_idempotents(R(), jacobson().members);
        add(r, "strongly J-*-clean", sjs());
        add(r, "R/J(R) is *-Boolean", star_boolean);
        add(r, "abelian", flags().abelian);
        add(r, "idempotents lift modulo J(R)", lifts);
        compare(r, 0, star_boolean && flags().abelian && lifts);
        break;
      }
      case StatementId::PrimeRadicalQuotient: {
        Ideal P = prime_radical(S_);
        add(r, "strongly J-*-clean", sjs());
        add(r, "abelian", flags().abelian);
        add(r, "P(R) is a *-ideal", P.star_closed);
        if (!P.star_closed) {
          r.consistent = false;
          r.witness = "prime radical is not closed under the involution";
          break;
        }
        StarRing Q = make_quotient(S_, P.members, options_.limits);
        bool q = decide(Q, Variant::StronglyJStarClean).holds;
        add(r, "R/P(R) strongly J-*-clean", q);
        compare(r, 0, flags().abelian && q);
        break;
      }
      case StatementId::GaussianUnits: {
        add(r, "2 in J(R)", flags().two_in_radical);
        if (!flags().two_in_radical) {
          vacuous(r, "hypothesis not met (2 is not in J(R))");
          break;
        }
        StarRing G = make_gaussian(S_, extension_limits(S_.order() * S_.order()));
        // a + bi is numbered a * |R| + b.
        ElementSet predicted;
        const Element n = static_cast<Element>(R().order());
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b)
            if (R().is_unit(R().add(a, b))) predicted.push_back(a * n + b);
        ElementSet actual = units(G.ring());
        add(r, "U(R[i]) = {a + bi | a + b unit}", actual == predicted);
        r.consistent = actual == predicted;
        if (!r.consistent)
          r.witness = "computed " + std::to_string(actual.size()) +
                      " units, predicted " + std::to_string(predicted.size());
        break;
      }
      case StatementId::GaussianExtension: {
        StarRing G = make_gaussian(S_, extension_limits(S_.order() * S_.order()));
        add(r, "R strongly J-*-clean", sjs());
        add(r, "R[i] strongly J-*-clean",
            decide(G, Variant::StronglyJStarClean).holds);
        all_equal(r);
        break;
      }
      case StatementId::TruncatedSeries: {
        if (aux_.truncation_orders.empty())
          throw AuxMissing("series check needs at least one truncation order");
        add(r, "R strongly J-*-clean", sjs());
        for (std::size_t n : aux_.truncation_orders) {
          if (n < 2) throw AuxMissing("truncation orders must be at least 2");
          StarRing T = make_truncated_series(
              S_, n, extension_limits(std::pow(S_.order(), n)));
          add(r, "R[[x]]/(x^" + std::to_string(n) + ") strongly J-*-clean",
              decide(T, Variant::StronglyJStarClean).holds);
        }
        all_equal(r);
        break;
      }
      case StatementId::GroupRing: {
        std::vector<GroupRingInstance> instances = aux_.group_rings;
        for (const auto& G : aux_.groups) instances.push_back({S_, G});
        if (instances.empty())
          throw AuxMissing("group-ring check needs at least one group");
        bool consistent = true;
        for (const auto& inst : instances) {
          const double size = std::pow(inst.base.order(), inst.group.order());
          StarRing RG =
              make_group_ring(inst.base, inst.group, extension_limits(size));
          bool lhs = decide(RG, Variant::StronglyJStarClean).holds;
          bool base = decide(inst.base, Variant::StronglyJStarClean).holds;
          bool two = is_2_group(inst.group);
          std::string tag = "|R| = " + std::to_string(inst.base.order()) +
                            ", |G| = " + std::to_string(inst.group.order()) +
                            ": ";
          add(r, tag + "RG strongly J-*-clean", lhs);
          add(r, tag + "R strongly J-*-clean", base);
          add(r, tag + "G is a 2-group", two);
          if (lhs != (base && two)) {
            consistent = false;
            r.witness = "disagreement for " + tag;
          }
        }
        r.consistent = consistent;
        break;
      }
    }
    if (!r.consistent && !r.witness) r.witness = "clauses disagree";
    return r;
  }

 private:
  const FiniteRing& R() const { return S_.ring(); }

  bool holds(Variant v) {
    auto it = decisions_.find(v);
    if (it == decisions_.end())
      it = decisions_.emplace(v, decide(ctx_, v).holds).first;
    return it->second;
  }
  bool sjs() { return holds(Variant::StronglyJStarClean); }

  const StructureFlags& flags() {
    if (!flags_) flags_ = classify_flags(S_);
    return *flags_;
  }
  const Ideal& jacobson() {
    if (!jacobson_) jacobson_ = jacobson_radical(S_);
    return *jacobson_;
  }
  const QuotientRing& radical_quotient() {
    if (!radical_quotient_)
      radical_quotient_ = quotient_ring(R(), jacobson().members, options_.limits);
    return *radical_quotient_;
  }
  const std::vector<Ideal>& maximal() {
    if (!maximal_) maximal_ = maximal_ideals(R(), options_.limits);
    return *maximal_;
  }

  Limits extension_limits(double size) const {
    check_order("auxiliary construction", size, options_.max_extension_order);
    return options_.limits;
  }

  std::string describe(const ElementSet& set) const {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i)
      s += (i ? "," : "") + R().label(set[i]);
    return s + "}";
  }

  /// A unit whose multiplicative order is not a power of two. Its presence
  /// in R/J(R) keeps R/J(R) from being Boolean although U(R/J(R)) is torsion.
  static std::optional<std::string> odd_order_unit(const FiniteRing& Q) {
    for (Element u = 0; u < Q.order(); ++u) {
      if (!Q.is_unit(u)) continue;
      std::size_t n = 1;
      for (Element acc = u; acc != Q.one(); acc = Q.mul(acc, u)) ++n;
      if ((n & (n - 1)) != 0)
        return "unit " + Q.label(u) + " of R/J(R) has order " +
               std::to_string(n);
    }
    return std::nullopt;
  }

  static void add(VerificationResult& r, std::string name, bool value) {
    r.clauses.push_back({std::move(name), value});
  }
  static void all_equal(VerificationResult& r, std::size_t from = 0) {
    r.consistent = true;
    for (std::size_t i = from + 1; i < r.clauses.size(); ++i)
      if (r.clauses[i].value != r.clauses[from].value) r.consistent = false;
  }
  static void compare(VerificationResult& r, std::size_t lhs, bool rhs) {
    r.consistent = r.clauses[lhs].value == rhs;
  }
  static void vacuous(VerificationResult& r, std::string why) {
    r.vacuous = true;
    r.consistent = true;
    r.witness = std::move(why);
  }

  /// In a strongly J-*-clean ring the radical companion of a is the unique
  /// projection e with a - e in J(R), and the unit companion is 1 - e.
  void check_companions(VerificationResult& r) {
    for (Element a = 0; a < R().order(); ++a) {
      auto strong = ctx_.witnesses(a, Variant::StronglyJStarClean);
      auto unique_j = ctx_.witnesses(a, Variant::UniquelyJStarClean);
      auto unique_u = ctx_.witnesses(a, Variant::UniquelyStronglyStarClean);
      bool ok = strong.size() == 1 && unique_j.size() == 1 &&
                unique_u.size() == 1 &&
                strong[0].companion == unique_j[0].companion &&
                unique_u[0].companion ==
                    R().sub(R().one(), unique_j[0].companion);
      if (!ok) {
        r.consistent = false;
        r.witness = "companion mismatch at element " + R().label(a);
        return;
      }
    }
    add(r, "companions agree elementwise", true);
  }

  StarRing S_;
  std::string label_;
  Aux aux_;
  HarnessOptions options_;
  CleanContext ctx_;
  std::map<Variant, bool> decisions_;
  std::optional<StructureFlags> flags_;
  std::optional<Ideal> jacobson_;
  std::optional<QuotientRing> radical_quotient_;
  std::optional<std::vector<Ideal>> maximal_;
};

inline VerificationResult verify_statement(const StarRing& S, StatementId id,
                                           const Aux& aux,
                                           const HarnessOptions& options = {},
                                           std::string label = "") {
  return StatementVerifier(S, std::move(label), aux, options).verify(id);
}

struct CorpusEntry {
  std::string label;
  StarRing ring;
  Aux aux;
};

struct EntryError {
  std::string ring;
  std::string message;
};

struct CorpusReport {
  std::vector<VerificationResult> results;
  std::vector<EntryError> errors;
  std::size_t consistent = 0;
  std::size_t vacuous = 0;
  std::size_t inconsistent = 0;

  bool ok() const noexcept { return inconsistent == 0 && errors.empty(); }
};

/// Verifies the chosen statements on every entry (all statements when
/// `statements` is empty). Results are sorted by ring label, then statement.
inline CorpusReport run_corpus(const std::vector<CorpusEntry>& corpus,
                               std::vector<StatementId> statements = {},
                               const HarnessOptions& options = {}) {
  if (statements.empty())
    statements.assign(kAllStatements.begin(), kAllStatements.end());
  std::sort(statements.begin(), statements.end());
  statements.erase(std::unique(statements.begin(), statements.end()),
                   statements.end());
  std::vector<const CorpusEntry*> order;
  for (const auto& e : corpus) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const CorpusEntry* a, const CorpusEntry* b) {
                     return a->label < b->label;
                   });
  CorpusReport report;
  for (const CorpusEntry* entry : order) {
    try {
      StatementVerifier verifier(entry->ring, entry->label,
                                 complete_aux(entry->ring, entry->aux, options),
                                 options);
      for (StatementId id : statements) {
        VerificationResult r = verifier.verify(id);
        if (r.vacuous)
          ++report.vacuous;
        else if (r.consistent)
          ++report.consistent;
        else
          ++report.inconsistent;
        report.results.push_back(std::move(r));
      }
    } catch (const Error& e) {
      report.errors.push_back({entry->label, e.what()});
    }
  }
  return report;
}

}  // namespace starclean
