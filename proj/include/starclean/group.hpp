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

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "starclean/errors.hpp"

namespace starclean {

/// Finite group given by its Cayley table.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return labels_.size(); }
  Element identity() const noexcept { return identity_; }
  Element op(Element g, Element h) const { return cayley_[g * order() + h]; }
  Element inverse(Element g) const { return inverse_[g]; }
  const std::string& label(Element g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Smallest k >= 1 with g^k = identity.
  std::size_t element_order(Element g) const {
    std::size_t k = 1;
    for (Element acc = g; acc != identity_; acc = op(acc, g)) ++k;
    return k;
  }

 private:
  FiniteGroup(std::vector<std::string> labels, std::vector<Element> cayley,
              Element identity, std::vector<Element> inverse)
      : labels_(std::move(labels)),
        cayley_(std::move(cayley)),
        inverse_(std::move(inverse)),
        identity_(identity) {}

  friend FiniteGroup build_group(std::vector<std::string>,
                                 std::vector<Element>, Element);

  std::vector<std::string> labels_;
  std::vector<Element> cayley_;
  std::vector<Element> inverse_;
  Element identity_;
};

/// Validates a row-major Cayley table and derives the inverse table.
inline FiniteGroup build_group(std::vector<std::string> labels,
                               std::vector<Element> cayley, Element identity) {
  const std::size_t n = labels.size();
  if (n == 0) throw ShapeError("group must be nonempty");
  if (cayley.size() != n * n) throw ShapeError("Cayley table has wrong size");
  if (identity >= n) throw ShapeError("group identity out of range");
  for (Element x : cayley)
    if (x >= n) throw ShapeError("Cayley table entry out of range");
  auto op = [&](Element a, Element b) { return cayley[a * n + b]; };
  std::vector<Element> inverse(n, static_cast<Element>(-1));
  for (Element a = 0; a < n; ++a) {
    if (op(identity, a) != a || op(a, identity) != a)
      throw AxiomViolation("group identity", {identity, a, a});
    for (Element b = 0; b < n; ++b) {
      if (op(a, b) == identity && op(b, a) == identity) inverse[a] = b;
      for (Element c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw AxiomViolation("group associativity", {a, b, c});
    }
    if (inverse[a] == static_cast<Element>(-1))
      throw AxiomViolation("group inverse", {a, a, a});
  }
  return FiniteGroup(std::move(labels), std::move(cayley), identity,
                     std::move(inverse));
}

/// C_n with elements e, g, g^2, ..., g^(n-1); index k is g^k.
inline FiniteGroup make_cyclic_group(std::size_t n) {
  if (n == 0) throw SpecError("cyclic group order must be positive");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k));
  }
  std::vector<Element> cayley(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      cayley[a * n + b] = static_cast<Element>((a + b) % n);
  return build_group(std::move(labels), std::move(cayley), 0);
}

/// G x H, elements (g,h) numbered row-major.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const std::size_t m = H.order();
  const std::size_t n = G.order() * m;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < m; ++h)
      labels.push_back("(" + G.label(g) + "," + H.label(h) + ")");
  std::vector<Element> cayley(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      cayley[a * n + b] = static_cast<Element>(
          G.op(a / m, b / m) * m + H.op(a % m, b % m));
  return build_group(std::move(labels), std::move(cayley),
                     static_cast<Element>(G.identity() * m + H.identity()));
}

/// Finite 2-group test: the group order is a power of two.
inline bool is_2_group(const FiniteGroup& G) {
  std::size_t n = G.order();
  return (n & (n - 1)) == 0;
}

/// Declarative group description: cyclic(n) or a direct product.
struct GroupSpec {
  enum class Kind { Cyclic, DirectProduct };
  Kind kind = Kind::Cyclic;
  std::size_t n = 1;
  std::vector<GroupSpec> factors;
};

inline FiniteGroup construct_group(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::Cyclic) return make_cyclic_group(spec.n);
  if (spec.factors.empty())
    throw SpecError("direct product needs at least one factor");
  FiniteGroup result = construct_group(spec.factors.front());
  for (std::size_t i = 1; i < spec.factors.size(); ++i)
    result = direct_product(result, construct_group(spec.factors[i]));
  return result;
}

}  // namespace starclean
