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

#include <cctype>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "starclean/errors.hpp"
#include "starclean/group.hpp"
#include "starclean/ideal.hpp"
#include "starclean/limits.hpp"
#include "starclean/ring.hpp"

namespace starclean {

namespace detail {

/// A freshly tabulated ring with the star its construction induces (not yet
/// validated as an involution; empty when the construction has none).
struct Tabulated {
  FiniteRing ring;
  std::vector<Element> natural_star;
};

/// Composite elements are tuples of component indices numbered row-major,
/// first component most significant.
class Radix {
 public:
  explicit Radix(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    total_ = 1;
    for (std::size_t s : sizes_) total_ *= s;
  }
  Radix(std::size_t base, std::size_t digits)
      : Radix(std::vector<std::size_t>(digits, base)) {}

  std::size_t total() const noexcept { return total_; }
  std::size_t digits() const noexcept { return sizes_.size(); }

  Element encode(const std::vector<Element>& tuple) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < sizes_.size(); ++i)
      idx = idx * sizes_[i] + tuple[i];
    return static_cast<Element>(idx);
  }

  /// All tuples in index order, flattened (total() x digits()).
  std::vector<Element> decode_all() const {
    const std::size_t k = sizes_.size();
    std::vector<Element> out(total_ * k);
    for (std::size_t idx = 0; idx < total_; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = k; i-- > 0;) {
        out[idx * k + i] = static_cast<Element>(rest % sizes_[i]);
        rest /= sizes_[i];
      }
    }
    return out;
  }

 private:
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 1;
};

inline double power(std::size_t base, std::size_t exp) {
  return std::pow(static_cast<double>(base), static_cast<double>(exp));
}

/// The whole label is one bracketed group: "(..)" or "[..]" whose opening
/// bracket closes at the last character.
inline bool is_bracketed(const std::string& s) {
  if (s.size() < 2 || (s.front() != '(' && s.front() != '[')) return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0) return i + 1 == s.size();
  }
  return false;
}

inline bool is_numeral(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

/// Parenthesizes compound labels. Bare names such as "i" are wrapped too, so
/// a constant term never collides with a basis name.
inline std::string group_label(const std::string& s) {
  return is_numeral(s) || is_bracketed(s) ? s : "(" + s + ")";
}

/// Sum-of-terms label: coefficient labels times basis names, zero terms
/// dropped. An empty basis name marks the constant term.
inline std::string linear_label(const FiniteRing& base,
                                const Element* coeffs,
                                const std::vector<std::string>& basis) {
  std::string out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Element c = coeffs[i];
    if (c == base.zero()) continue;
    std::string term;
    if (basis[i].empty()) {
      term = group_label(base.label(c));
    } else if (c == base.one()) {
      term = basis[i];
    } else {
      term = group_label(base.label(c)) + basis[i];
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? base.label(base.zero()) : out;
}

inline std::vector<std::string> power_basis(std::size_t n, const char* var) {
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i)
    basis.push_back(i == 0 ? "" : i == 1 ? std::string(var)
                                         : std::string(var) + "^" +
                                               std::to_string(i));
  return basis;
}

/// Builds tables of a ring over tuples of base elements where addition is
/// componentwise and multiplication is given by `mul_tuple`.
template <typename MulTuple>
FiniteRing tabulate_over_tuples(const FiniteRing& base, std::size_t digits,
                                std::vector<std::string> labels,
                                MulTuple&& mul_tuple, Element one_index,
                                const Limits& limits) {
  Radix radix(base.order(), digits);
  const std::size_t n = radix.total();
  const auto tuples = radix.decode_all();
  std::vector<Element> add(n * n), mul(n * n);
  std::vector<Element> scratch(digits), product(digits);
  for (std::size_t a = 0; a < n; ++a) {
    const Element* ta = &tuples[a * digits];
    for (std::size_t b = 0; b < n; ++b) {
      const Element* tb = &tuples[b * digits];
      for (std::size_t i = 0; i < digits; ++i)
        scratch[i] = base.add(ta[i], tb[i]);
      add[a * n + b] = radix.encode(scratch);
      mul_tuple(ta, tb, product.data());
      mul[a * n + b] = radix.encode(product);
    }
  }
  Element zero_index =
      radix.encode(std::vector<Element>(digits, base.zero()));
  return build_ring(std::move(labels), std::move(add), std::move(mul),
                    zero_index, one_index, limits);
}

/// Star applying a map to each coordinate of a tuple ring.
inline std::vector<Element> coordinatewise_star(
    std::size_t base_order, std::size_t digits,
    const std::function<Element(std::size_t, const Element*)>& image) {
  Radix radix(base_order, digits);
  const auto tuples = radix.decode_all();
  std::vector<Element> perm(radix.total());
  std::vector<Element> out(digits);
  for (std::size_t x = 0; x < radix.total(); ++x) {
    for (std::size_t i = 0; i < digits; ++i)
      out[i] = image(i, &tuples[x * digits]);
    perm[x] = radix.encode(out);
  }
  return perm;
}

// --- ring-level tabulations --------------------------------------------

inline Tabulated modular_ring(std::size_t n, const Limits& limits) {
  if (n < 1) throw SpecError("modulus must be positive");
  check_order("modular ring", static_cast<double>(n), limits.max_ring_order);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Element> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>((a + b) % n);
      mul[a * n + b] = static_cast<Element>((a * b) % n);
    }
  FiniteRing R = build_ring(std::move(labels), std::move(add), std::move(mul),
                            0, static_cast<Element>(1 % n), limits);
  std::vector<Element> star(n);
  std::iota(star.begin(), star.end(), Element{0});
  return {std::move(R), std::move(star)};
}

inline Tabulated product_ring(const std::vector<StarRing>& factors,
                              const Limits& limits) {
  if (factors.size() < 2) throw SpecError("product needs at least two factors");
  std::vector<std::size_t> sizes;
  double total = 1;
  for (const auto& f : factors) {
    sizes.push_back(f.order());
    total *= static_cast<double>(f.order());
  }
  check_order("product ring", total, limits.max_ring_order);
  Radix radix(sizes);
  const std::size_t k = factors.size();
  const std::size_t n = radix.total();
  const auto tuples = radix.decode_all();
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += factors[i].ring().label(tuples[x * k + i]);
    }
    labels[x] = s + ")";
  }
  std::vector<Element> add(n * n), mul(n * n), tmp(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i)
        tmp[i] = factors[i].ring().add(tuples[a * k + i], tuples[b * k + i]);
      add[a * n + b] = radix.encode(tmp);
      for (std::size_t i = 0; i < k; ++i)
        tmp[i] = factors[i].ring().mul(tuples[a * k + i], tuples[b * k + i]);
      mul[a * n + b] = radix.encode(tmp);
    }
  std::vector<Element> zero(k), one(k);
  for (std::size_t i = 0; i < k; ++i) {
    zero[i] = factors[i].ring().zero();
    one[i] = factors[i].ring().one();
  }
  FiniteRing R = build_ring(std::move(labels), std::move(add), std::move(mul),
                            radix.encode(zero), radix.encode(one), limits);
  std::vector<Element> star(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < k; ++i)
      tmp[i] = factors[i].star(tuples[x * k + i]);
    star[x] = radix.encode(tmp);
  }
  return {std::move(R), std::move(star)};
}

/// Coordinate exchange on a two-factor product of identical rings.
inline std::vector<Element> product_swap(const std::vector<StarRing>& factors) {
  if (factors.size() != 2 ||
      !factors[0].ring().same_tables(factors[1].ring()))
    throw StarUndefined("swap needs two identical factors");
  const std::size_t m = factors[0].order();
  std::vector<Element> perm(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      perm[a * m + b] = static_cast<Element>(b * m + a);
  return perm;
}

inline Tabulated matrix_ring(const StarRing& base, std::size_t k,
                             bool upper_triangular, const Limits& limits) {
  if (k < 1) throw SpecError("matrix size must be positive");
  const FiniteRing& B = base.ring();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = upper_triangular ? i : 0; j < k; ++j)
      slots.emplace_back(i, j);
  check_order("matrix ring", power(B.order(), slots.size()),
              limits.max_ring_order);
  const std::size_t d = slots.size();
  std::vector<std::vector<int>> slot_of(k, std::vector<int>(k, -1));
  for (std::size_t s = 0; s < d; ++s) slot_of[slots[s].first][slots[s].second] = static_cast<int>(s);

  auto entry = [&](const Element* t, std::size_t i, std::size_t j) {
    int s = slot_of[i][j];
    return s < 0 ? B.zero() : t[s];
  };

  Radix radix(B.order(), d);
  const auto tuples = radix.decode_all();
  std::vector<std::string> labels(radix.total());
  for (std::size_t x = 0; x < radix.total(); ++x) {
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < k; ++j) {
        if (j) s += ",";
        s += B.label(entry(&tuples[x * d], i, j));
      }
      s += "]";
    }
    labels[x] = s + "]";
  }
  std::vector<Element> one(d);
  for (std::size_t s = 0; s < d; ++s)
    one[s] = slots[s].first == slots[s].second ? B.one() : B.zero();

  auto mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t s = 0; s < d; ++s) {
      auto [i, j] = slots[s];
      Element acc = B.zero();
      for (std::size_t l = 0; l < k; ++l)
        acc = B.add(acc, B.mul(entry(a, i, l), entry(b, l, j)));
      out[s] = acc;
    }
  };
  FiniteRing R = tabulate_over_tuples(B, d, std::move(labels), mul,
                                      radix.encode(one), limits);
  std::vector<Element> star;
  if (!upper_triangular) {
    // (A*)_ij = (A_ji)*
    star = coordinatewise_star(
        B.order(), d, [&](std::size_t s, const Element* t) {
          auto [i, j] = slots[s];
          return base.star(entry(t, j, i));
        });
  }
  return {std::move(R), std::move(star)};
}

inline Tabulated poly_quotient_ring(const StarRing& base,
                                    const std::vector<Element>& modulus,
                                    const Limits& limits) {
  const FiniteRing& B = base.ring();
  if (modulus.size() < 2)
    throw SpecError("modulus must have degree at least one");
  for (Element c : modulus)
    if (c >= B.order()) throw SpecError("modulus coefficient out of range");
  if (modulus.back() != B.one()) throw SpecError("modulus must be monic");
  for (Element c : modulus)
    if (base.star(c) != c)
      throw StarUndefined(
          "modulus coefficient " + B.label(c) +
          " is not fixed by the star; coefficientwise star does not descend");
  const std::size_t d = modulus.size() - 1;
  check_order("polynomial quotient", power(B.order(), d),
              limits.max_ring_order);
  Radix radix(B.order(), d);
  const auto tuples = radix.decode_all();
  const auto basis = power_basis(d, "x");
  std::vector<std::string> labels(radix.total());
  for (std::size_t x = 0; x < radix.total(); ++x)
    labels[x] = linear_label(B, &tuples[x * d], basis);
  std::vector<Element> one(d, B.zero());
  one[0] = B.one();
  std::vector<Element> full(2 * d - 1);
  auto mul = [&](const Element* a, const Element* b, Element* out) {
    std::fill(full.begin(), full.end(), B.zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        full[i + j] = B.add(full[i + j], B.mul(a[i], b[j]));
    // c x^k = c x^(k-d) x^d = -sum_j c f_j x^(k-d+j)
    for (std::size_t k = 2 * d - 1; k-- > d;) {
      Element c = full[k];
      if (c == B.zero()) continue;
      full[k] = B.zero();
      for (std::size_t j = 0; j < d; ++j)
        full[k - d + j] = B.sub(full[k - d + j], B.mul(c, modulus[j]));
    }
    for (std::size_t i = 0; i < d; ++i) out[i] = full[i];
  };
  FiniteRing R = tabulate_over_tuples(B, d, std::move(labels), mul,
                                      radix.encode(one), limits);
  auto star = coordinatewise_star(
      B.order(), d,
      [&](std::size_t i, const Element* t) { return base.star(t[i]); });
  return {std::move(R), std::move(star)};
}

inline Tabulated truncated_series_ring(const StarRing& base, std::size_t n,
                                       const Limits& limits) {
  if (n < 1) throw SpecError("truncation order must be positive");
  const FiniteRing& B = base.ring();
  check_order("truncated power series", power(B.order(), n),
              limits.max_ring_order);
  Radix radix(B.order(), n);
  const auto tuples = radix.decode_all();
  const auto basis = power_basis(n, "x");
  std::vector<std::string> labels(radix.total());
  for (std::size_t x = 0; x < radix.total(); ++x)
    labels[x] = linear_label(B, &tuples[x * n], basis);
  std::vector<Element> one(n, B.zero());
  one[0] = B.one();
  auto mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t k = 0; k < n; ++k) {
      Element acc = B.zero();
      for (std::size_t i = 0; i <= k; ++i)
        acc = B.add(acc, B.mul(a[i], b[k - i]));
      out[k] = acc;
    }
  };
  FiniteRing R = tabulate_over_tuples(B, n, std::move(labels), mul,
                                      radix.encode(one), limits);
  auto star = coordinatewise_star(
      B.order(), n,
      [&](std::size_t i, const Element* t) { return base.star(t[i]); });
  return {std::move(R), std::move(star)};
}

inline Tabulated gaussian_ring(const StarRing& base, const Limits& limits) {
  const FiniteRing& B = base.ring();
  check_order("gaussian extension", power(B.order(), 2), limits.max_ring_order);
  Radix radix(B.order(), 2);
  const auto tuples = radix.decode_all();
  const std::vector<std::string> basis{"", "i"};
  std::vector<std::string> labels(radix.total());
  for (std::size_t x = 0; x < radix.total(); ++x)
    labels[x] = linear_label(B, &tuples[x * 2], basis);
  // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
  auto mul = [&](const Element* x, const Element* y, Element* out) {
    out[0] = B.sub(B.mul(x[0], y[0]), B.mul(x[1], y[1]));
    out[1] = B.add(B.mul(x[0], y[1]), B.mul(x[1], y[0]));
  };
  FiniteRing R = tabulate_over_tuples(B, 2, std::move(labels), mul,
                                      radix.encode({B.one(), B.zero()}),
                                      limits);
  auto star = coordinatewise_star(
      B.order(), 2,
      [&](std::size_t i, const Element* t) { return base.star(t[i]); });
  return {std::move(R), std::move(star)};
}

inline Tabulated group_ring(const StarRing& base, const FiniteGroup& G,
                            const Limits& limits) {
  const FiniteRing& B = base.ring();
  const std::size_t m = G.order();
  check_order("group ring", power(B.order(), m), limits.max_ring_order);
  Radix radix(B.order(), m);
  const auto tuples = radix.decode_all();
  std::vector<std::string> basis(m);
  for (Element g = 0; g < m; ++g)
    basis[g] = g == G.identity() ? "" : G.label(g);
  std::vector<std::string> labels(radix.total());
  for (std::size_t x = 0; x < radix.total(); ++x)
    labels[x] = linear_label(B, &tuples[x * m], basis);
  std::vector<Element> one(m, B.zero());
  one[G.identity()] = B.one();
  auto mul = [&](const Element* a, const Element* b, Element* out) {
    for (std::size_t g = 0; g < m; ++g) out[g] = B.zero();
    for (Element g = 0; g < m; ++g) {
      if (a[g] == B.zero()) continue;
      for (Element h = 0; h < m; ++h) {
        Element gh = G.op(g, h);
        out[gh] = B.add(out[gh], B.mul(a[g], b[h]));
      }
    }
  };
  FiniteRing R = tabulate_over_tuples(B, m, std::move(labels), mul,
                                      radix.encode(one), limits);
  // (sum a_g g)* = sum a_g* g^-1, so the coefficient at g is (a_{g^-1})*.
  auto star = coordinatewise_star(
      B.order(), m, [&](std::size_t g, const Element* t) {
        return base.star(t[G.inverse(static_cast<Element>(g))]);
      });
  return {std::move(R), std::move(star)};
}

inline Tabulated trivial_extension_ring(const FiniteRing& B,
                                        const std::vector<Element>& sigma,
                                        const Limits& limits) {
  if (sigma.size() != B.order())
    throw SigmaNotInvolutiveAutomorphism("sigma has the wrong length");
  try {
    Automorphism a = build_automorphism(B, sigma);
    if (!a.is_involutive())
      throw SigmaNotInvolutiveAutomorphism("sigma squared is not the identity");
  } catch (const NotAutomorphism& e) {
    throw SigmaNotInvolutiveAutomorphism(e.what());
  } catch (const ShapeError& e) {
    throw SigmaNotInvolutiveAutomorphism(e.what());
  }
  check_order("trivial extension", power(B.order(), 2), limits.max_ring_order);
  Radix radix(B.order(), 2);
  const auto tuples = radix.decode_all();
  std::vector<std::string> labels(radix.total());
  for (std::size_t x = 0; x < radix.total(); ++x)
    labels[x] = "(" + B.label(tuples[2 * x]) + "," +
                B.label(tuples[2 * x + 1]) + ")";
  // (a, b)(c, d) = (ac, ad + b sigma(c))
  auto mul = [&](const Element* x, const Element* y, Element* out) {
    out[0] = B.mul(x[0], y[0]);
    out[1] = B.add(B.mul(x[0], y[1]), B.mul(x[1], sigma[y[0]]));
  };
  FiniteRing R = tabulate_over_tuples(B, 2, std::move(labels), mul,
                                      radix.encode({B.one(), B.zero()}),
                                      limits);
  auto star = coordinatewise_star(
      B.order(), 2, [&](std::size_t i, const Element* t) {
        return i == 0 ? t[0] : sigma[t[1]];
      });
  return {std::move(R), std::move(star)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public constructors, each returning the ring with its induced involution.

/// Z_n with the identity involution.
inline StarRing make_modular(std::size_t n,
                             const Limits& limits = default_limits()) {
  auto t = detail::modular_ring(n, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

/// Direct product with the componentwise star.
inline StarRing make_product(const std::vector<StarRing>& factors,
                             const Limits& limits = default_limits()) {
  auto t = detail::product_ring(factors, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

/// R x R with the coordinate exchange (a, b) -> (b, a).
inline StarRing make_product_swap(const StarRing& factor,
                                  const Limits& limits = default_limits()) {
  std::vector<StarRing> factors{factor, factor};
  auto t = detail::product_ring(factors, limits);
  return make_star_ring(t.ring, detail::product_swap(factors));
}

/// M_k(R) with the conjugate transpose (A*)_ij = (A_ji)*.
inline StarRing make_matrix(const StarRing& base, std::size_t k,
                            const Limits& limits = default_limits()) {
  auto t = detail::matrix_ring(base, k, false, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

/// R[x]/(f) with the coefficientwise star. The modulus is given low degree
/// first, must be monic, and every coefficient must be fixed by the star.
inline StarRing make_poly_quotient(const StarRing& base,
                                   const std::vector<Element>& modulus,
                                   const Limits& limits = default_limits()) {
  auto t = detail::poly_quotient_ring(base, modulus, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

/// T2(R, sigma): pairs (a, b) with (a, b)(c, d) = (ac, ad + b sigma(c)) and
/// star (a, b) -> (a, sigma(b)). Sigma must be an automorphism with
/// sigma^2 = id.
inline StarRing make_trivial_extension(const FiniteRing& base,
                                       const std::vector<Element>& sigma,
                                       const Limits& limits = default_limits()) {
  auto t = detail::trivial_extension_ring(base, sigma, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

inline StarRing make_trivial_extension(const FiniteRing& base,
                                       const Automorphism& sigma,
                                       const Limits& limits = default_limits()) {
  return make_trivial_extension(base, sigma.map(), limits);
}

/// RG with (sum a_g g)* = sum a_g* g^-1.
inline StarRing make_group_ring(const StarRing& base, const FiniteGroup& G,
                                const Limits& limits = default_limits()) {
  auto t = detail::group_ring(base, G, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

/// R[i] with i^2 = -1 and (a + bi)* = a* + b* i.
inline StarRing make_gaussian(const StarRing& base,
                              const Limits& limits = default_limits()) {
  auto t = detail::gaussian_ring(base, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

/// R[[x]]/(x^n) with the coefficientwise star.
inline StarRing make_truncated_series(const StarRing& base, std::size_t n,
                                      const Limits& limits = default_limits()) {
  auto t = detail::truncated_series_ring(base, n, limits);
  return make_star_ring(t.ring, std::move(t.natural_star));
}

/// R/I for a *-ideal I, with the induced star.
inline StarRing make_quotient(const StarRing& S, const ElementSet& ideal,
                              const Limits& limits = default_limits()) {
  if (auto why = ideal_violation(S.ring(), ideal))
    throw NotIdeal("not an ideal: " + *why);
  if (auto x = star_escape(S, ideal)) throw NotStarIdeal(*x);
  QuotientRing q = quotient_ring(S.ring(), ideal, limits);
  std::vector<Element> star(q.ring.order());
  for (Element c = 0; c < star.size(); ++c)
    star[c] = q.projection[S.star(q.representative[c])];
  return make_star_ring(q.ring, std::move(star));
}

}  // namespace starclean
