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
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "starclean/errors.hpp"
#include "starclean/ideal.hpp"
#include "starclean/limits.hpp"
#include "starclean/ring.hpp"

namespace starclean {

inline ElementSet units(const FiniteRing& R) {
  ElementSet out;
  for (Element x = 0; x < R.order(); ++x)
    if (R.is_unit(x)) out.push_back(x);
  return out;
}

/// Membership mask of J(R): x is in J iff 1 - ax is a unit for every a.
inline std::vector<char> radical_mask(const FiniteRing& R) {
  const Element n = static_cast<Element>(R.order());
  std::vector<char> in(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool quasi_regular = true;
    for (Element a = 0; a < n && quasi_regular; ++a)
      quasi_regular = R.is_unit(R.sub(R.one(), R.mul(a, x)));
    in[x] = quasi_regular;
  }
  return in;
}

/// Jacobson radical by left quasi-regularity. The result is re-checked to be
/// a two-sided ideal; failure there means the tables are inconsistent.
inline Ideal jacobson_radical(const FiniteRing& R) {
  ElementSet members = from_mask(radical_mask(R));
  if (auto why = ideal_violation(R, members))
    throw std::logic_error("quasi-regular set is not an ideal: " + *why);
  return Ideal{std::move(members), false};
}

inline Ideal jacobson_radical(const StarRing& S) {
  Ideal J = jacobson_radical(S.ring());
  J.star_closed = !star_escape(S, J.members).has_value();
  return J;
}

/// Prime radical as the set of strongly nilpotent elements.
///
/// Nonzero elements form a digraph with a -> b whenever b is a nonzero
/// element of aRa. An element is strongly nilpotent iff no path from it
/// reaches a cycle, i.e. every path dies out at zero.
inline Ideal prime_radical(const FiniteRing& R) {
  const Element n = static_cast<Element>(R.order());
  std::vector<std::vector<Element>> preds(n);
  std::vector<std::size_t> out_degree(n, 0);
  std::vector<char> mark(n, 0);
  for (Element a = 0; a < n; ++a) {
    if (a == R.zero()) continue;
    std::fill(mark.begin(), mark.end(), 0);
    for (Element r = 0; r < n; ++r) {
      Element b = R.mul(R.mul(a, r), a);
      if (b != R.zero() && !mark[b]) {
        mark[b] = 1;
        preds[b].push_back(a);
        ++out_degree[a];
      }
    }
  }
  std::vector<char> nilpotent(n, 0);
  std::deque<Element> ready;
  for (Element a = 0; a < n; ++a)
    if (out_degree[a] == 0) ready.push_back(a);
  while (!ready.empty()) {
    Element b = ready.front();
    ready.pop_front();
    nilpotent[b] = 1;
    for (Element a : preds[b])
      if (--out_degree[a] == 0) ready.push_back(a);
  }
  nilpotent[R.zero()] = 1;
  return Ideal{from_mask(nilpotent), false};
}

inline Ideal prime_radical(const StarRing& S) {
  Ideal P = prime_radical(S.ring());
  P.star_closed = !star_escape(S, P.members).has_value();
  return P;
}

inline bool is_idempotent(const FiniteRing& R, Element e) {
  return R.mul(e, e) == e;
}

inline bool is_projection(const StarRing& S, Element e) {
  return is_idempotent(S.ring(), e) && S.star(e) == e;
}

inline ElementSet idempotents(const FiniteRing& R) {
  ElementSet out;
  for (Element e = 0; e < R.order(); ++e)
    if (is_idempotent(R, e)) out.push_back(e);
  return out;
}

inline ElementSet projections(const StarRing& S) {
  ElementSet out;
  for (Element e = 0; e < S.order(); ++e)
    if (is_projection(S, e)) out.push_back(e);
  return out;
}

inline bool is_central(const FiniteRing& R, Element c) {
  for (Element x = 0; x < R.order(); ++x)
    if (R.mul(c, x) != R.mul(x, c)) return false;
  return true;
}

inline ElementSet center_elements(const FiniteRing& R) {
  ElementSet out;
  for (Element c = 0; c < R.order(); ++c)
    if (is_central(R, c)) out.push_back(c);
  return out;
}

/// Subring on the given (sorted) elements, renumbered in ascending order.
inline FiniteRing restrict_ring(const FiniteRing& R, const ElementSet& subset,
                                const Limits& limits = default_limits()) {
  const std::size_t m = subset.size();
  std::vector<Element> local(R.order(), FiniteRing::kNone);
  for (Element i = 0; i < m; ++i) local[subset[i]] = i;
  auto at = [&](Element x) {
    if (local[x] == FiniteRing::kNone)
      throw NotIdeal("subset is not closed under the ring operations");
    return local[x];
  };
  std::vector<std::string> labels;
  for (Element x : subset) labels.push_back(R.label(x));
  std::vector<Element> add(m * m), mul(m * m);
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b) {
      add[a * m + b] = at(R.add(subset[a], subset[b]));
      mul[a * m + b] = at(R.mul(subset[a], subset[b]));
    }
  return build_ring(std::move(labels), std::move(add), std::move(mul),
                    at(R.zero()), at(R.one()), limits);
}

/// The center with the restricted involution.
struct Center {
  StarRing ring;
  ElementSet embedding;  // center index -> index in the parent ring
};

inline Center center(const StarRing& S,
                     const Limits& limits = default_limits()) {
  ElementSet members = center_elements(S.ring());
  FiniteRing C = restrict_ring(S.ring(), members, limits);
  std::vector<Element> local(S.order(), FiniteRing::kNone);
  for (Element i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<Element> star(members.size());
  for (Element i = 0; i < members.size(); ++i) {
    Element image = local[S.star(members[i])];
    if (image == FiniteRing::kNone)
      throw std::logic_error("involution does not preserve the center");
    star[i] = image;
  }
  return Center{make_star_ring(C, std::move(star)), std::move(members)};
}

/// All two-sided ideals, sorted lexicographically by member list.
///
/// Every ideal is a sum of principal ideals, so closing the set of principal
/// ideals under pairwise sums (with deduplication) finds them all.
inline std::vector<Ideal> ideals(const FiniteRing& R,
                                 std::size_t max_enumeration) {
  check_order("ideal enumeration", static_cast<double>(R.order()),
              max_enumeration);
  std::set<ElementSet> principal;
  for (Element x = 0; x < R.order(); ++x)
    principal.insert(generated_ideal(R, {x}));
  std::set<ElementSet> found(principal.begin(), principal.end());
  std::deque<ElementSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    ElementSet current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& p : principal) {
      if (std::includes(current.begin(), current.end(), p.begin(), p.end()))
        continue;
      ElementSet gens = current;
      gens.insert(gens.end(), p.begin(), p.end());
      ElementSet sum = additive_closure(R, gens);
      if (found.insert(sum).second) frontier.push_back(std::move(sum));
    }
  }
  std::vector<Ideal> out;
  for (const auto& members : found) out.push_back(Ideal{members, false});
  return out;
}

inline std::vector<Ideal> ideals(const FiniteRing& R,
                                 const Limits& limits = default_limits()) {
  return ideals(R, limits.max_ideal_enumeration_order);
}

/// Maximal two-sided ideals, via the ideals of R/J(R) pulled back to R.
inline std::vector<Ideal> maximal_ideals(
    const FiniteRing& R, const Limits& limits = default_limits()) {
  const Ideal J = jacobson_radical(R);
  QuotientRing q = quotient_ring(R, J.members, limits);
  const std::size_t m = q.ring.order();
  std::vector<Ideal> all = ideals(q.ring, limits.max_ideal_enumeration_order);
  std::vector<Ideal> proper;
  for (auto& I : all)
    if (I.size() < m) proper.push_back(I);
  std::vector<Ideal> out;
  for (const auto& I : proper) {
    bool maximal = true;
    for (const auto& K : proper) {
      if (K.size() > I.size() &&
          std::includes(K.members.begin(), K.members.end(), I.members.begin(),
                        I.members.end())) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    ElementSet pulled;
    for (Element x = 0; x < R.order(); ++x)
      if (I.contains(q.projection[x])) pulled.push_back(x);
    out.push_back(Ideal{std::move(pulled), false});
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    return a.members < b.members;
  });
  return out;
}

/// True iff every idempotent of R/I is the image of an idempotent of R.
inline bool lifts_idempotents(const FiniteRing& R, const ElementSet& ideal) {
  if (auto why = ideal_violation(R, ideal))
    throw NotIdeal("not an ideal: " + *why);
  auto in = membership(R.order(), ideal);
  for (Element e = 0; e < R.order(); ++e) {
    if (!in[R.sub(R.mul(e, e), e)]) continue;  // coset of e not idempotent
    bool lifted = false;
    for (Element i : ideal) {
      if (is_idempotent(R, R.add(e, i))) {
        lifted = true;
        break;
      }
    }
    if (!lifted) return false;
  }
  return true;
}

/// Every unit has finite multiplicative order. Always true in a finite
/// ring; evaluated literally so statements that quantify over it stay
/// faithful.
inline bool unit_group_is_torsion(const FiniteRing& R) {
  for (Element u = 0; u < R.order(); ++u) {
    if (!R.is_unit(u)) continue;
    Element acc = u;
    std::size_t steps = 1;
    while (acc != R.one() && steps <= R.order()) {
      acc = R.mul(acc, u);
      ++steps;
    }
    if (acc != R.one()) return false;
  }
  return true;
}

/// 1 = u + v for some units u, v.
inline bool one_is_sum_of_two_units(const FiniteRing& R) {
  for (Element u = 0; u < R.order(); ++u)
    if (R.is_unit(u) && R.is_unit(R.sub(R.one(), u))) return true;
  return false;
}

/// {x | 1 - x is a unit}, computed without reference to J(R).
inline ElementSet one_minus_unit_set(const FiniteRing& R) {
  ElementSet out;
  for (Element x = 0; x < R.order(); ++x)
    if (R.is_unit(R.sub(R.one(), x))) out.push_back(x);
  return out;
}

/// {x | 1 + x x* is a unit}.
inline ElementSet one_plus_norm_unit_set(const StarRing& S) {
  const FiniteRing& R = S.ring();
  ElementSet out;
  for (Element x = 0; x < R.order(); ++x)
    if (R.is_unit(R.add(R.one(), R.mul(x, S.star(x))))) out.push_back(x);
  return out;
}

struct StructureFlags {
  bool abelian = false;
  bool boolean_ring = false;
  bool star_boolean = false;
  bool local = false;
  bool regular = false;
  bool star_regular = false;
  bool two_in_radical = false;
  bool center_plus_radical_is_all = false;
  bool directly_finite = false;
  friend bool operator==(const StructureFlags&,
                         const StructureFlags&) = default;
};

namespace detail {

/// xR as a membership mask.
inline std::vector<char> right_ideal_mask(const FiniteRing& R, Element x) {
  std::vector<char> mask(R.order(), 0);
  for (Element r = 0; r < R.order(); ++r) mask[R.mul(x, r)] = 1;
  return mask;
}

}  // namespace detail

inline StructureFlags classify_flags(const StarRing& S) {
  const FiniteRing& R = S.ring();
  const Element n = static_cast<Element>(R.order());
  StructureFlags f;

  const ElementSet idem = idempotents(R);
  f.abelian = std::all_of(idem.begin(), idem.end(),
                          [&](Element e) { return is_central(R, e); });
  f.boolean_ring = idem.size() == n;
  f.star_boolean = projections(S).size() == n;

  f.local = true;
  for (Element a = 0; a < n && f.local; ++a)
    f.local = R.is_unit(a) || R.is_unit(R.sub(R.one(), a));

  f.regular = true;
  for (Element x = 0; x < n && f.regular; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y)
      found = R.mul(R.mul(x, y), x) == x;
    f.regular = found;
  }

  const ElementSet proj = projections(S);
  std::vector<std::vector<char>> proj_ideals;
  for (Element p : proj) proj_ideals.push_back(detail::right_ideal_mask(R, p));
  f.star_regular = true;
  for (Element x = 0; x < n && f.star_regular; ++x) {
    auto xr = detail::right_ideal_mask(R, x);
    f.star_regular = std::find(proj_ideals.begin(), proj_ideals.end(), xr) !=
                     proj_ideals.end();
  }

  const auto J = radical_mask(R);
  f.two_in_radical = J[R.add(R.one(), R.one())] != 0;

  const ElementSet C = center_elements(R);
  f.center_plus_radical_is_all = true;
  for (Element a = 0; a < n && f.center_plus_radical_is_all; ++a) {
    bool found = false;
    for (Element c : C)
      if (J[R.sub(a, c)]) {
        found = true;
        break;
      }
    f.center_plus_radical_is_all = found;
  }

  // ab = 1 implies ba = 1; automatic for finite rings, checked anyway.
  f.directly_finite = true;
  for (Element a = 0; a < n && f.directly_finite; ++a)
    for (Element b = 0; b < n; ++b)
      if (R.mul(a, b) == R.one() && R.mul(b, a) != R.one()) {
        f.directly_finite = false;
        break;
      }
  return f;
}

}  // namespace starclean
