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

#include <gtest/gtest.h>

#include <numeric>

#include "corpus.hpp"
#include "oracle.hpp"
#include "starclean/constructors.hpp"
#include "starclean/ring.hpp"

namespace starclean {
namespace {

FiniteRing modular_from_oracle(std::size_t n) {
  std::vector<Element> add, mul;
  oracle::modular_tables(n, add, mul);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return build_ring(labels, add, mul, 0, 1 % n);
}

TEST(BuildRing, AcceptsSmallestField) {
  FiniteRing R = modular_from_oracle(2);
  EXPECT_EQ(R.order(), 2u);
  EXPECT_EQ(R.zero(), 0u);
  EXPECT_EQ(R.one(), 1u);
  EXPECT_TRUE(R.is_commutative());
}

TEST(BuildRing, RejectsCorruptedMultiplication) {
  std::vector<Element> add, mul;
  oracle::modular_tables(4, add, mul);
  mul[2 * 4 + 2] = 1;
  try {
    build_ring({"0", "1", "2", "3"}, add, mul, 0, 1);
    FAIL() << "corrupted table accepted";
  } catch (const AxiomViolation& e) {
    EXPECT_TRUE(e.axiom().find("distributiv") != std::string::npos ||
                e.axiom().find("associativ") != std::string::npos)
        << e.axiom();
    auto [a, b, c] = e.witness();
    EXPECT_LT(a, 4u);
    EXPECT_LT(b, 4u);
    EXPECT_LT(c, 4u);
  }
}

TEST(BuildRing, RejectsMalformedShapes) {
  EXPECT_THROW(build_ring({}, std::vector<Element>{}, std::vector<Element>{},
                          0, 0),
               ShapeError);
  EXPECT_THROW(build_ring({"0", "1"}, std::vector<Element>{0, 1, 1},
                          std::vector<Element>{0, 0, 0, 1}, 0, 1),
               ShapeError);
  EXPECT_THROW(build_ring({"0", "1"}, std::vector<Element>{0, 1, 1, 7},
                          std::vector<Element>{0, 0, 0, 1}, 0, 1),
               ShapeError);
  EXPECT_THROW(build_ring({"a", "a"}, std::vector<Element>{0, 1, 1, 0},
                          std::vector<Element>{0, 0, 0, 1}, 0, 1),
               ShapeError);
}

TEST(BuildRing, RejectsWrongIdentities) {
  std::vector<Element> add, mul;
  oracle::modular_tables(3, add, mul);
  EXPECT_THROW(build_ring({"0", "1", "2"}, add, mul, 0, 2), AxiomViolation);
  EXPECT_THROW(build_ring({"0", "1", "2"}, add, mul, 1, 1), AxiomViolation);
}

TEST(BuildRing, HonorsOrderBound) {
  Limits limits;
  limits.max_ring_order = 3;
  std::vector<Element> add, mul;
  oracle::modular_tables(4, add, mul);
  EXPECT_THROW(build_ring({"0", "1", "2", "3"}, add, mul, 0, 1, limits),
               OrderBoundExceeded);
}

TEST(BuildRing, AcceptsFourElementBooleanExample) {
  auto entry = testing_corpus::load("ex34");
  EXPECT_EQ(entry.ring.order(), 4u);
  EXPECT_TRUE(entry.ring.ring().is_commutative());
}

TEST(Inverse, MatchesBruteForce) {
  for (std::size_t n : {2, 4, 6, 8, 9, 12}) {
    FiniteRing R = modular_from_oracle(n);
    for (Element x = 0; x < n; ++x) {
      auto inv = inverse(R, x);
      EXPECT_EQ(inv.has_value(), oracle::is_unit(R, x)) << n << " " << x;
      if (inv) {
        EXPECT_EQ((x * *inv) % n, 1u);
      }
    }
  }
  FiniteRing Z4 = modular_from_oracle(4);
  EXPECT_EQ(inverse(Z4, 3), std::optional<Element>(3));
  EXPECT_FALSE(inverse(Z4, 2).has_value());
  EXPECT_EQ(inverse(Z4, Z4.one()), std::optional<Element>(Z4.one()));
}

TEST(RingArithmetic, SubtractionAndMultiples) {
  FiniteRing R = modular_from_oracle(9);
  for (Element a = 0; a < 9; ++a) {
    EXPECT_EQ(R.add(a, R.neg(a)), R.zero());
    for (Element b = 0; b < 9; ++b) EXPECT_EQ(R.sub(a, b), (a + 9 - b) % 9);
  }
  EXPECT_EQ(R.multiple_of_one(11), 2u);
  EXPECT_EQ(R.multiple_of_one(-1), 8u);
  EXPECT_EQ(additive_order(R, 3), 3u);
  EXPECT_EQ(additive_order(R, 1), 9u);
}

TEST(BuildInvolution, IdentityOnCommutativeRing) {
  FiniteRing R = modular_from_oracle(4);
  Involution inv = build_involution(R, {0, 1, 2, 3});
  EXPECT_TRUE(inv.is_identity());
}

TEST(BuildInvolution, SwapOnBooleanExample) {
  auto entry = testing_corpus::load("ex34");
  const FiniteRing& R = entry.ring.ring();
  Element E = *R.find("E"), F = *R.find("F");
  EXPECT_EQ(entry.ring.star(E), F);
  EXPECT_EQ(entry.ring.star(F), E);
  EXPECT_EQ(entry.ring.star(*R.find("I")), *R.find("I"));
}

TEST(BuildInvolution, RejectsBadMaps) {
  FiniteRing R = modular_from_oracle(4);
  EXPECT_THROW(build_involution(R, {0, 3, 2, 1}), NotInvolution);  // 1 -> 3
  EXPECT_THROW(build_involution(R, {0, 1, 2}), Error);
  EXPECT_THROW(build_involution(R, {0, 1, 1, 3}), Error);
  auto t = testing_corpus::load("t2z2_triangular");
  std::vector<Element> id(t.ring.order());
  std::iota(id.begin(), id.end(), 0);
  try {
    build_involution(t.ring.ring(), id);
    FAIL() << "identity accepted on a noncommutative ring";
  } catch (const NotInvolution& e) {
    EXPECT_NE(e.axiom().find("anti"), std::string::npos);
  }
}

TEST(BuildInvolution, ForeignInvolutionRejected) {
  FiniteRing A = modular_from_oracle(4);
  FiniteRing B = modular_from_oracle(4);
  Involution inv = identity_involution(A);
  EXPECT_THROW(StarRing(B, inv), NotInvolution);
}

TEST(EnumerateInvolutions, SmallCases) {
  FiniteRing Z2 = modular_from_oracle(2);
  auto z2 = enumerate_involutions(Z2);
  ASSERT_EQ(z2.size(), 1u);
  EXPECT_TRUE(z2[0].is_identity());

  auto prod = testing_corpus::load("z2xz2_id");
  auto list = enumerate_involutions(prod.ring.ring());
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].map(), (std::vector<Element>{0, 1, 2, 3}));
  EXPECT_EQ(list[1].map(), (std::vector<Element>{0, 2, 1, 3}));
}

TEST(EnumerateInvolutions, TriangularContainsCornerExchange) {
  auto t = testing_corpus::load("t2z2_triangular");
  const FiniteRing& R = t.ring.ring();
  auto list = enumerate_involutions(R);
  ASSERT_FALSE(list.empty());
  bool found = false;
  for (const auto& inv : list) found = found || inv.map() == t.ring.involution().map();
  EXPECT_TRUE(found);
  // The displayed map is the corner exchange (a,b;0,c) -> (c,b;0,a).
  EXPECT_EQ(R.label(t.ring.star(*R.find("[[1,1],[0,0]]"))), "[[0,1],[0,1]]");
}

TEST(EnumerateInvolutions, AgreesWithPermutationSearch) {
  for (const auto& entry : testing_corpus::load_all()) {
    const FiniteRing& R = entry.ring.ring();
    if (R.order() > 8) continue;
    std::vector<std::vector<Element>> found;
    for (const auto& inv : enumerate_involutions(R)) found.push_back(inv.map());
    EXPECT_EQ(found, oracle::involutions(R)) << entry.label;
  }
}

TEST(EnumerateInvolutions, HonorsSearchBound) {
  auto entry = testing_corpus::load("z9");
  Limits limits;
  limits.max_involution_search_order = 8;
  EXPECT_THROW(enumerate_involutions(entry.ring.ring(), limits),
               OrderBoundExceeded);
}

TEST(EnumerateAutomorphisms, ProductOfFieldsHasSwap) {
  auto prod = testing_corpus::load("z2xz2_id");
  EXPECT_EQ(enumerate_automorphisms(prod.ring.ring()).size(), 2u);
  auto gf = testing_corpus::load("gr_z2_c3");
  // Z2C3 = Z2 x F4: the Frobenius of F4 is the only nontrivial one.
  EXPECT_EQ(enumerate_automorphisms(gf.ring.ring()).size(), 2u);
}

}  // namespace
}  // namespace starclean
