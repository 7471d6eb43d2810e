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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starclean/errors.hpp"
#include "starclean/ring.hpp"
#include "starclean/structure.hpp"

namespace starclean {

/// Decomposition variants a = e + u.
enum class Variant {
  Clean,
  UniquelyClean,
  StronglyClean,
  UniquelyStronglyClean,
  StarClean,
  StronglyStarClean,
  UniquelyStronglyStarClean,
  JClean,
  StronglyJClean,
  JStarClean,
  StronglyJStarClean,
  UniquelyJStarClean,
  CondT32_5,
};

inline constexpr std::array<Variant, 13> kAllVariants{
    Variant::Clean,
    Variant::UniquelyClean,
    Variant::StronglyClean,
    Variant::UniquelyStronglyClean,
    Variant::StarClean,
    Variant::StronglyStarClean,
    Variant::UniquelyStronglyStarClean,
    Variant::JClean,
    Variant::StronglyJClean,
    Variant::JStarClean,
    Variant::StronglyJStarClean,
    Variant::UniquelyJStarClean,
    Variant::CondT32_5,
};

/// What a variant asks of the companion e and the complement u = a - e.
struct VariantRules {
  bool projection;  // e must be a projection (else any idempotent)
  bool radical;     // u in J(R) (else u a unit)
  bool commute;     // ae = ea
  bool unique;      // exactly one companion per element
  bool star_twist;  // additionally ae* = e*a and e - e* in J(R)
};

inline constexpr VariantRules rules(Variant v) {
  switch (v) {
    case Variant::Clean: return {false, false, false, false, false};
    case Variant::UniquelyClean: return {false, false, false, true, false};
    case Variant::StronglyClean: return {false, false, true, false, false};
    case Variant::UniquelyStronglyClean: return {false, false, true, true, false};
    case Variant::StarClean: return {true, false, false, false, false};
    case Variant::StronglyStarClean: return {true, false, true, false, false};
    case Variant::UniquelyStronglyStarClean: return {true, false, true, true, false};
    case Variant::JClean: return {false, true, false, false, false};
    case Variant::StronglyJClean: return {false, true, true, false, false};
    case Variant::JStarClean: return {true, true, false, false, false};
    case Variant::StronglyJStarClean: return {true, true, true, false, false};
    case Variant::UniquelyJStarClean: return {true, true, false, true, false};
    case Variant::CondT32_5: return {false, false, true, true, true};
  }
  return {};
}

inline constexpr std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Clean: return "CLEAN";
    case Variant::UniquelyClean: return "UNIQUELY_CLEAN";
    case Variant::StronglyClean: return "STRONGLY_CLEAN";
    case Variant::UniquelyStronglyClean: return "UNIQUELY_STRONGLY_CLEAN";
    case Variant::StarClean: return "STAR_CLEAN";
    case Variant::StronglyStarClean: return "STRONGLY_STAR_CLEAN";
    case Variant::UniquelyStronglyStarClean: return "UNIQUELY_STRONGLY_STAR_CLEAN";
    case Variant::JClean: return "J_CLEAN";
    case Variant::StronglyJClean: return "STRONGLY_J_CLEAN";
    case Variant::JStarClean: return "J_STAR_CLEAN";
    case Variant::StronglyJStarClean: return "STRONGLY_J_STAR_CLEAN";
    case Variant::UniquelyJStarClean: return "UNIQUELY_J_STAR_CLEAN";
    case Variant::CondT32_5: return "COND_T32_5";
  }
  return "";
}

inline std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : kAllVariants)
    if (variant_name(v) == name) return v;
  return std::nullopt;
}

struct CleanWitness {
  Element element;
  Element companion;   // e: idempotent or projection
  Element complement;  // u = a - e: unit or radical element
  bool commutes;       // ae = ea
  friend bool operator==(const CleanWitness&, const CleanWitness&) = default;
};

/// Sets shared by every decomposition query on one star ring.
class CleanContext {
 public:
  explicit CleanContext(const StarRing& S)
      : S_(S),
        radical_(radical_mask(S.ring())),
        idempotents_(idempotents(S.ring())) {}

  const StarRing& star_ring() const noexcept { return S_; }
  bool in_radical(Element x) const { return radical_[x] != 0; }
  const ElementSet& idempotent_list() const noexcept { return idempotents_; }

  /// Witnesses for a under v, ascending by companion index.
  std::vector<CleanWitness> witnesses(Element a, Variant v) const {
    const FiniteRing& R = S_.ring();
    const VariantRules r = rules(v);
    std::vector<CleanWitness> out;
    for (Element e : idempotents_) {
      if (r.projection && S_.star(e) != e) continue;
      Element u = R.sub(a, e);
      if (r.radical ? !in_radical(u) : !R.is_unit(u)) continue;
      bool commutes = R.mul(a, e) == R.mul(e, a);
      if (r.commute && !commutes) continue;
      if (r.star_twist) {
        Element es = S_.star(e);
        if (R.mul(a, es) != R.mul(es, a)) continue;
        if (!in_radical(R.sub(e, es))) continue;
      }
      out.push_back({a, e, u, commutes});
    }
    return out;
  }

 private:
  StarRing S_;
  std::vector<char> radical_;
  ElementSet idempotents_;
};

inline std::vector<CleanWitness> witnesses(const StarRing& S, Element a,
                                           Variant v) {
  if (a >= S.order()) throw ShapeError("element index out of range");
  return CleanContext(S).witnesses(a, v);
}

struct DecisionFailure {
  Element element;
  std::size_t witness_count;
  friend bool operator==(const DecisionFailure&,
                         const DecisionFailure&) = default;
};

struct DecisionReport {
  Variant variant;
  bool holds = true;
  /// Least failing element and its witness count.
  std::optional<DecisionFailure> first_failure;
  /// Every failure, filled only in exhaustive mode.
  std::vector<DecisionFailure> failures;
};

/// Whether every element satisfies v. Existence variants fail on zero
/// witnesses, uniqueness variants on any count other than one; the count is
/// of distinct companions since u = a - e is determined by e.
inline DecisionReport decide(const CleanContext& ctx, Variant v,
                             bool exhaustive = false) {
  DecisionReport report;
  report.variant = v;
  const bool unique = rules(v).unique;
  for (Element a = 0; a < ctx.star_ring().order(); ++a) {
    std::size_t count = ctx.witnesses(a, v).size();
    bool ok = unique ? count == 1 : count >= 1;
    if (ok) continue;
    if (report.holds) {
      report.holds = false;
      report.first_failure = DecisionFailure{a, count};
    }
    if (!exhaustive) break;
    report.failures.push_back({a, count});
  }
  return report;
}

inline DecisionReport decide(const StarRing& S, Variant v,
                             bool exhaustive = false) {
  return decide(CleanContext(S), v, exhaustive);
}

/// Projection attached to an idempotent e with e - e* in J(R):
///   f = e* e [1 + (e* - e)(e - e*)]^-1.
/// The result satisfies f = f^2 = f*, fe = f, ef = e and e - f in J(R);
/// each identity is checked before returning.
inline Element projectionize(const StarRing& S, Element e) {
  const FiniteRing& R = S.ring();
  if (e >= R.order()) throw ShapeError("element index out of range");
  if (!is_idempotent(R, e))
    throw NotIdempotent("element " + R.label(e) + " is not idempotent");
  const auto J = radical_mask(R);
  const Element es = S.star(e);
  const Element d = R.sub(e, es);
  if (!J[d])
    throw RadicalPreconditionFailed("e - e* = " + R.label(d) +
                                    " is not in the Jacobson radical");
  const Element bracket = R.add(R.one(), R.mul(R.sub(es, e), d));
  auto inv = R.inverse(bracket);
  if (!inv) throw std::logic_error("1 + (e* - e)(e - e*) is not invertible");
  const Element f = R.mul(R.mul(es, e), *inv);
  const bool ok = R.mul(f, f) == f && S.star(f) == f && R.mul(f, e) == f &&
                  R.mul(e, f) == e && J[R.sub(e, f)];
  if (!ok) throw std::logic_error("projectionize postcondition failed");
  return f;
}

}  // namespace starclean
