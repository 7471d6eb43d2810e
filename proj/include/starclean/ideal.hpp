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
#include <optional>
#include <string>
#include <vector>

#include "starclean/errors.hpp"
#include "starclean/ring.hpp"

namespace starclean {

/// Two-sided ideal as a sorted member list.
///
/// star_closed is only meaningful for ideals obtained from a StarRing;
/// ring-level operations leave it false.
struct Ideal {
  ElementSet members;
  bool star_closed = false;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Element x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// Membership mask over the ring's indices.
inline std::vector<char> membership(std::size_t order, const ElementSet& set) {
  std::vector<char> mask(order, 0);
  for (Element x : set) mask[x] = 1;
  return mask;
}

inline ElementSet from_mask(const std::vector<char>& mask) {
  ElementSet out;
  for (Element x = 0; x < mask.size(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

/// Additive subgroup generated by gens.
inline ElementSet additive_closure(const FiniteRing& R,
                                   const ElementSet& gens) {
  std::vector<char> in(R.order(), 0);
  std::vector<Element> members{R.zero()};
  in[R.zero()] = 1;
  std::vector<Element> distinct;
  {
    std::vector<char> seen(R.order(), 0);
    for (Element g : gens)
      if (!seen[g] && g != R.zero()) {
        seen[g] = 1;
        distinct.push_back(g);
      }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : distinct) {
      Element z = R.add(members[i], g);
      if (!in[z]) {
        in[z] = 1;
        members.push_back(z);
      }
    }
  }
  return from_mask(in);
}

/// Smallest two-sided ideal containing gens: the additive span of r g s.
inline ElementSet generated_ideal(const FiniteRing& R, const ElementSet& gens) {
  std::vector<char> products(R.order(), 0);
  for (Element g : gens)
    for (Element r = 0; r < R.order(); ++r) {
      Element rg = R.mul(r, g);
      for (Element s = 0; s < R.order(); ++s) products[R.mul(rg, s)] = 1;
    }
  return additive_closure(R, from_mask(products));
}

/// Reason the set fails to be a two-sided ideal, if it does.
inline std::optional<std::string> ideal_violation(const FiniteRing& R,
                                                  const ElementSet& set) {
  for (Element x : set)
    if (x >= R.order()) return "member index out of range";
  auto in = membership(R.order(), set);
  if (!in[R.zero()]) return "does not contain zero";
  for (Element x : set) {
    for (Element y : set)
      if (!in[R.add(x, y)])
        return "not closed under addition (" + R.label(x) + ", " +
               R.label(y) + ")";
    if (!in[R.neg(x)]) return "not closed under negation (" + R.label(x) + ")";
    for (Element r = 0; r < R.order(); ++r) {
      if (!in[R.mul(r, x)])
        return "does not absorb left multiplication (" + R.label(r) + ", " +
               R.label(x) + ")";
      if (!in[R.mul(x, r)])
        return "does not absorb right multiplication (" + R.label(x) + ", " +
               R.label(r) + ")";
    }
  }
  return std::nullopt;
}

/// First member whose star leaves the set.
inline std::optional<Element> star_escape(const StarRing& S,
                                          const ElementSet& set) {
  auto in = membership(S.order(), set);
  for (Element x : set)
    if (!in[S.star(x)]) return x;
  return std::nullopt;
}

inline Ideal make_ideal(const FiniteRing& R, ElementSet members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (auto why = ideal_violation(R, members)) throw NotIdeal("not an ideal: " + *why);
  return Ideal{std::move(members), false};
}

inline Ideal make_ideal(const StarRing& S, ElementSet members) {
  Ideal ideal = make_ideal(S.ring(), std::move(members));
  ideal.star_closed = !star_escape(S, ideal.members).has_value();
  return ideal;
}

/// R/I with cosets numbered by their smallest member.
struct QuotientRing {
  FiniteRing ring;
  std::vector<Element> projection;      // R index -> quotient index
  std::vector<Element> representative;  // quotient index -> R index
};

inline QuotientRing quotient_ring(const FiniteRing& R, const ElementSet& ideal,
                                  const Limits& limits = default_limits()) {
  if (auto why = ideal_violation(R, ideal))
    throw NotIdeal("not an ideal: " + *why);
  const std::size_t n = R.order();
  std::vector<Element> projection(n, FiniteRing::kNone);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (projection[x] != FiniteRing::kNone) continue;
    Element q = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element i : ideal) projection[R.add(x, i)] = q;
  }
  const std::size_t m = reps.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Element r : reps) labels.push_back("[" + R.label(r) + "]");
  std::vector<Element> add(m * m), mul(m * m);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) {
      add[a * m + b] = projection[R.add(reps[a], reps[b])];
      mul[a * m + b] = projection[R.mul(reps[a], reps[b])];
    }
  FiniteRing Q = build_ring(std::move(labels), std::move(add), std::move(mul),
                            projection[R.zero()], projection[R.one()], limits);
  return QuotientRing{std::move(Q), std::move(projection), std::move(reps)};
}

}  // namespace starclean
