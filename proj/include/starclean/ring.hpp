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
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "starclean/errors.hpp"
#include "starclean/limits.hpp"

namespace starclean {

/// Sorted list of element indices.
using ElementSet = std::vector<Element>;

/// A finite associative unital ring given by full operation tables.
///
/// Elements are the dense indices 0..order()-1. Zero and one are stored
/// explicitly, so constructions may keep whatever numbering is natural to
/// them. Instances are immutable and cheap to copy; the tables are shared.
/// The only way to obtain one is build_ring(), which checks every axiom.
class FiniteRing {
 public:
  std::size_t order() const noexcept { return d_->n; }
  Element zero() const noexcept { return d_->zero; }
  Element one() const noexcept { return d_->one; }

  Element add(Element a, Element b) const { return d_->add[a * d_->n + b]; }
  Element mul(Element a, Element b) const { return d_->mul[a * d_->n + b]; }
  Element neg(Element a) const { return d_->neg[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  /// k·1 for an integer k (negative k uses the additive inverse).
  Element multiple_of_one(long long k) const {
    Element base = k < 0 ? neg(one()) : one();
    unsigned long long count = k < 0 ? static_cast<unsigned long long>(-k)
                                     : static_cast<unsigned long long>(k);
    Element acc = zero();
    for (unsigned long long i = 0; i < count; ++i) acc = add(acc, base);
    return acc;
  }

  /// Two-sided inverse, if any.
  std::optional<Element> inverse(Element x) const {
    Element inv = d_->inv[x];
    if (inv == kNone) return std::nullopt;
    return inv;
  }
  bool is_unit(Element x) const { return d_->inv[x] != kNone; }

  const std::string& label(Element x) const { return d_->labels[x]; }
  const std::vector<std::string>& labels() const noexcept {
    return d_->labels;
  }
  std::optional<Element> find(std::string_view label) const {
    auto it = d_->index.find(std::string(label));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }

  std::span<const Element> add_table() const noexcept { return d_->add; }
  std::span<const Element> mul_table() const noexcept { return d_->mul; }

  bool is_commutative() const {
    const std::size_t n = order();
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Same element numbering and tables (labels ignored).
  bool same_tables(const FiniteRing& other) const {
    return d_ == other.d_ ||
           (order() == other.order() && zero() == other.zero() &&
            one() == other.one() && d_->add == other.d_->add &&
            d_->mul == other.d_->mul);
  }

  /// Identity of the shared table storage; used to pair maps with rings.
  const void* identity() const noexcept { return d_.get(); }

  static constexpr Element kNone = static_cast<Element>(-1);

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::unordered_map<std::string, Element> index;
    std::vector<Element> add;
    std::vector<Element> mul;
    std::vector<Element> neg;
    std::vector<Element> inv;
    Element zero = 0;
    Element one = 0;
  };

  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  friend FiniteRing build_ring(std::vector<std::string> labels,
                               std::vector<Element> add,
                               std::vector<Element> mul, Element zero,
                               Element one, const Limits& limits);

  std::shared_ptr<const Data> d_;
};

/// Validates flat row-major tables and returns the ring.
///
/// Every ring axiom is checked exhaustively, which is O(order^3). Throws
/// ShapeError for malformed input and AxiomViolation with a witness triple
/// for the first failing axiom.
inline FiniteRing build_ring(std::vector<std::string> labels,
                             std::vector<Element> add, std::vector<Element> mul,
                             Element zero, Element one,
                             const Limits& limits = default_limits()) {
  const std::size_t n = labels.size();
  if (n == 0) throw ShapeError("ring must have at least one element");
  check_order("ring construction", static_cast<double>(n),
              limits.max_ring_order);
  if (add.size() != n * n || mul.size() != n * n) {
    throw ShapeError("operation tables must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n || mul[i] >= n) {
      throw ShapeError("table entry out of range at position " +
                       std::to_string(i));
    }
  }
  if (zero >= n || one >= n) throw ShapeError("zero/one index out of range");

  auto data = std::make_shared<FiniteRing::Data>();
  data->n = n;
  for (Element i = 0; i < n; ++i) {
    if (!data->index.emplace(labels[i], i).second) {
      throw ShapeError("duplicate element label '" + labels[i] + "'");
    }
  }

  auto A = [&](Element a, Element b) { return add[a * n + b]; };
  auto M = [&](Element a, Element b) { return mul[a * n + b]; };
  const Element N = static_cast<Element>(n);

  for (Element a = 0; a < N; ++a) {
    if (A(zero, a) != a || A(a, zero) != a)
      throw AxiomViolation("additive identity", {zero, a, a});
    if (M(one, a) != a || M(a, one) != a)
      throw AxiomViolation("multiplicative identity", {one, a, a});
    for (Element b = 0; b < N; ++b) {
      if (A(a, b) != A(b, a))
        throw AxiomViolation("additive commutativity", {a, b, b});
    }
  }

  std::vector<Element> neg(n, FiniteRing::kNone);
  for (Element a = 0; a < N; ++a) {
    for (Element b = 0; b < N; ++b) {
      if (A(a, b) == zero) {
        neg[a] = b;
        break;
      }
    }
    if (neg[a] == FiniteRing::kNone)
      throw AxiomViolation("additive inverse", {a, a, a});
  }

  for (Element a = 0; a < N; ++a) {
    const Element* add_a = &add[a * n];
    const Element* mul_a = &mul[a * n];
    for (Element b = 0; b < N; ++b) {
      const Element* add_ab = &add[add_a[b] * n];
      const Element* mul_ab = &mul[mul_a[b] * n];
      const Element* add_b = &add[b * n];
      const Element* mul_b = &mul[b * n];
      for (Element c = 0; c < N; ++c) {
        if (add_ab[c] != add_a[add_b[c]])
          throw AxiomViolation("additive associativity", {a, b, c});
        if (mul_ab[c] != mul_a[mul_b[c]])
          throw AxiomViolation("multiplicative associativity", {a, b, c});
        if (mul_a[add_b[c]] != A(mul_a[b], mul_a[c]))
          throw AxiomViolation("left distributivity", {a, b, c});
        // (a + b)c = ac + bc
        if (M(add_a[b], c) != A(M(a, c), mul_b[c]))
          throw AxiomViolation("right distributivity", {a, b, c});
      }
    }
  }

  std::vector<Element> inv(n, FiniteRing::kNone);
  for (Element a = 0; a < N; ++a) {
    for (Element b = 0; b < N; ++b) {
      if (M(a, b) == one && M(b, a) == one) {
        inv[a] = b;
        break;
      }
    }
  }

  data->labels = std::move(labels);
  data->add = std::move(add);
  data->mul = std::move(mul);
  data->neg = std::move(neg);
  data->inv = std::move(inv);
  data->zero = zero;
  data->one = one;
  return FiniteRing(std::move(data));
}

/// Nested-table overload.
inline FiniteRing build_ring(std::vector<std::string> labels,
                             const std::vector<std::vector<Element>>& add,
                             const std::vector<std::vector<Element>>& mul,
                             Element zero, Element one,
                             const Limits& limits = default_limits()) {
  const std::size_t n = labels.size();
  auto flatten = [n](const std::vector<std::vector<Element>>& table,
                     const char* which) {
    if (table.size() != n)
      throw ShapeError(std::string(which) + " table has wrong row count");
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : table) {
      if (row.size() != n)
        throw ShapeError(std::string(which) + " table has a ragged row");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  };
  return build_ring(std::move(labels), flatten(add, "addition"),
                    flatten(mul, "multiplication"), zero, one, limits);
}

/// Two-sided inverse of x, checked on both sides.
inline std::optional<Element> inverse(const FiniteRing& R, Element x) {
  if (x >= R.order()) throw ShapeError("element index out of range");
  return R.inverse(x);
}

/// Additive order of x.
inline std::size_t additive_order(const FiniteRing& R, Element x) {
  std::size_t k = 1;
  for (Element acc = x; acc != R.zero(); acc = R.add(acc, x)) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Maps

namespace detail {

inline void check_permutation(const FiniteRing& R,
                              const std::vector<Element>& map) {
  if (map.size() != R.order())
    throw ShapeError("map length does not match ring order");
  std::vector<char> seen(R.order(), 0);
  for (Element x : map) {
    if (x >= R.order() || seen[x])
      throw ShapeError("map is not a permutation of the element indices");
    seen[x] = 1;
  }
}

/// First failing (axiom, witness) for an additive, one-preserving map that is
/// multiplicative (anti = false) or anti-multiplicative (anti = true).
inline std::optional<std::pair<std::string, std::pair<Element, Element>>>
find_map_violation(const FiniteRing& R, const std::vector<Element>& f,
                   bool anti) {
  const Element n = static_cast<Element>(R.order());
  if (f[R.one()] != R.one())
    return std::pair{std::string("preserves one"),
                     std::pair{R.one(), R.one()}};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f[R.add(x, y)] != R.add(f[x], f[y]))
        return std::pair{std::string("additivity"), std::pair{x, y}};
      Element expected = anti ? R.mul(f[y], f[x]) : R.mul(f[x], f[y]);
      if (f[R.mul(x, y)] != expected)
        return std::pair{std::string(anti ? "anti-multiplicativity"
                                          : "multiplicativity"),
                         std::pair{x, y}};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Ring automorphism stored as a permutation of element indices.
class Automorphism {
 public:
  Element operator()(Element x) const { return map_[x]; }
  const std::vector<Element>& map() const noexcept { return map_; }
  const void* ring_identity() const noexcept { return ring_; }

  bool is_involutive() const {
    for (Element x = 0; x < map_.size(); ++x)
      if (map_[map_[x]] != x) return false;
    return true;
  }

 private:
  Automorphism(std::vector<Element> map, const void* ring)
      : map_(std::move(map)), ring_(ring) {}
  friend Automorphism build_automorphism(const FiniteRing&,
                                         std::vector<Element>);
  std::vector<Element> map_;
  const void* ring_;
};

class NotAutomorphism : public Error {
 public:
  using Error::Error;
};

inline Automorphism build_automorphism(const FiniteRing& R,
                                       std::vector<Element> perm) {
  detail::check_permutation(R, perm);
  if (auto bad = detail::find_map_violation(R, perm, /*anti=*/false)) {
    throw NotAutomorphism("not an automorphism: " + bad->first +
                          " fails at (" + std::to_string(bad->second.first) +
                          ", " + std::to_string(bad->second.second) + ")");
  }
  return Automorphism(std::move(perm), R.identity());
}

/// Anti-automorphism of order two, stored as a permutation.
class Involution {
 public:
  Element operator()(Element x) const { return map_[x]; }
  const std::vector<Element>& map() const noexcept { return map_; }
  const void* ring_identity() const noexcept { return ring_; }

  bool is_identity() const {
    for (Element x = 0; x < map_.size(); ++x)
      if (map_[x] != x) return false;
    return true;
  }

 private:
  Involution(std::vector<Element> map, const void* ring)
      : map_(std::move(map)), ring_(ring) {}
  friend Involution build_involution(const FiniteRing&, std::vector<Element>);
  std::vector<Element> map_;
  const void* ring_;
};

/// Validates perm as an involution of R: additive, one-preserving,
/// anti-multiplicative, and its own inverse. All pairs are checked.
inline Involution build_involution(const FiniteRing& R,
                                   std::vector<Element> perm) {
  if (perm.size() != R.order())
    throw NotInvolution("map length", {0, 0});
  {
    std::vector<char> seen(R.order(), 0);
    for (Element x = 0; x < perm.size(); ++x) {
      if (perm[x] >= R.order() || seen[perm[x]])
        throw NotInvolution("bijectivity", {x, x});
      seen[perm[x]] = 1;
    }
  }
  for (Element x = 0; x < perm.size(); ++x) {
    if (perm[perm[x]] != x) throw NotInvolution("order two", {x, x});
  }
  if (auto bad = detail::find_map_violation(R, perm, /*anti=*/true)) {
    throw NotInvolution(bad->first, bad->second);
  }
  return Involution(std::move(perm), R.identity());
}

inline Involution identity_involution(const FiniteRing& R) {
  std::vector<Element> perm(R.order());
  std::iota(perm.begin(), perm.end(), Element{0});
  return build_involution(R, std::move(perm));
}

/// A ring paired with an involution.
class StarRing {
 public:
  StarRing(FiniteRing ring, Involution star)
      : ring_(std::move(ring)), star_(std::move(star)) {
    if (star_.ring_identity() != ring_.identity())
      throw NotInvolution("involution belongs to a different ring", {0, 0});
  }

  const FiniteRing& ring() const noexcept { return ring_; }
  const Involution& involution() const noexcept { return star_; }
  Element star(Element x) const { return star_(x); }
  std::size_t order() const noexcept { return ring_.order(); }

 private:
  FiniteRing ring_;
  Involution star_;
};

inline StarRing make_star_ring(const FiniteRing& R, std::vector<Element> perm) {
  return StarRing(R, build_involution(R, std::move(perm)));
}

// ---------------------------------------------------------------------------
// Involution search

namespace detail {

/// Greedy generating set of the additive group, in index order.
inline std::vector<Element> additive_generators(const FiniteRing& R) {
  std::vector<char> in_span(R.order(), 0);
  std::vector<Element> span{R.zero()};
  in_span[R.zero()] = 1;
  std::vector<Element> gens;
  for (Element x = 0; x < R.order(); ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    // span <- span + <x>
    std::vector<Element> next;
    for (Element m = x;; m = R.add(m, x)) {
      for (Element s : span) {
        Element z = R.add(s, m);
        if (!in_span[z]) {
          in_span[z] = 1;
          next.push_back(z);
        }
      }
      if (m == R.zero()) break;
    }
    span.insert(span.end(), next.begin(), next.end());
  }
  return gens;
}

/// Calls visit(map) for every automorphism of the additive group of R.
/// A map is fixed by the images of the additive generators; each partial
/// assignment is extended to the spanned subgroup and rejected as soon as
/// it fails to be a well-defined injective homomorphism.
template <typename Visit>
void for_each_additive_automorphism(const FiniteRing& R, Visit&& visit) {
  const std::size_t n = R.order();
  const auto gens = additive_generators(R);
  std::vector<std::size_t> order(n);
  for (Element x = 0; x < n; ++x) order[x] = additive_order(R, x);

  struct Partial {
    std::vector<Element> phi;
    std::vector<char> used;
    std::vector<Element> domain;
  };

  auto recurse = [&](auto&& self, std::size_t depth,
                     const Partial& current) -> void {
    if (depth == gens.size()) {
      visit(current.phi);
      return;
    }
    const Element g = gens[depth];
    for (Element h = 0; h < n; ++h) {
      if (order[h] != order[g]) continue;
      Partial next = current;
      bool ok = true;
      Element mg = R.zero();
      Element mh = R.zero();
      for (std::size_t m = 0; m < order[g] && ok; ++m) {
        for (Element x : current.domain) {
          Element z = R.add(x, mg);
          Element image = R.add(current.phi[x], mh);
          if (next.phi[z] == FiniteRing::kNone) {
            if (next.used[image]) {
              ok = false;
              break;
            }
            next.phi[z] = image;
            next.used[image] = 1;
            next.domain.push_back(z);
          } else if (next.phi[z] != image) {
            ok = false;
            break;
          }
        }
        mg = R.add(mg, g);
        mh = R.add(mh, h);
      }
      if (ok) self(self, depth + 1, next);
    }
  };

  Partial start;
  start.phi.assign(n, FiniteRing::kNone);
  start.used.assign(n, 0);
  start.phi[R.zero()] = R.zero();
  start.used[R.zero()] = 1;
  start.domain.push_back(R.zero());
  recurse(recurse, 0, start);
}

}  // namespace detail

/// Every involution of R in lexicographic order of the permutation.
///
/// Searches additive automorphisms and keeps the one-preserving,
/// anti-multiplicative ones of order two. Throws OrderBoundExceeded above
/// limits.max_involution_search_order.
inline std::vector<Involution> enumerate_involutions(
    const FiniteRing& R, const Limits& limits = default_limits()) {
  check_order("involution enumeration", static_cast<double>(R.order()),
              limits.max_involution_search_order);
  std::vector<std::vector<Element>> maps;
  detail::for_each_additive_automorphism(
      R, [&](const std::vector<Element>& phi) {
        if (phi[R.one()] != R.one()) return;
        for (Element x = 0; x < phi.size(); ++x)
          if (phi[phi[x]] != x) return;
        for (Element x = 0; x < phi.size(); ++x)
          for (Element y = 0; y < phi.size(); ++y)
            if (phi[R.mul(x, y)] != R.mul(phi[y], phi[x])) return;
        maps.push_back(phi);
      });
  std::sort(maps.begin(), maps.end());
  std::vector<Involution> result;
  result.reserve(maps.size());
  for (auto& m : maps) result.push_back(build_involution(R, std::move(m)));
  return result;
}

/// Every automorphism of R in lexicographic order.
inline std::vector<Automorphism> enumerate_automorphisms(
    const FiniteRing& R, const Limits& limits = default_limits()) {
  check_order("automorphism enumeration", static_cast<double>(R.order()),
              limits.max_involution_search_order);
  std::vector<std::vector<Element>> maps;
  detail::for_each_additive_automorphism(
      R, [&](const std::vector<Element>& phi) {
        if (!detail::find_map_violation(R, phi, false)) maps.push_back(phi);
      });
  std::sort(maps.begin(), maps.end());
  std::vector<Automorphism> result;
  for (auto& m : maps) result.push_back(build_automorphism(R, std::move(m)));
  return result;
}

}  // namespace starclean
