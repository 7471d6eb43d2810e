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

#include "corpus.hpp"
#include "oracle.hpp"
#include "starclean/constructors.hpp"
#include "starclean/structure.hpp"

namespace starclean {
namespace {

ElementSet labelled(const StarRing& S, std::initializer_list<const char*> ls) {
  ElementSet out;
  for (const char* l : ls) out.push_back(*S.ring().find(l));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Units, SmallRings) {
  EXPECT_EQ(units(make_modular(2).ring()), (ElementSet{1}));
  EXPECT_EQ(units(make_modular(4).ring()), (ElementSet{1, 3}));
}

TEST(Units, GaussianOverZ4) {
  StarRing G = make_gaussian(make_modular(4));
  const FiniteRing& R = G.ring();
  ElementSet expected;
  // Elements are numbered a * 4 + b for a + bi.
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      if ((a + b) % 2 == 1) expected.push_back(a * 4 + b);
  EXPECT_EQ(units(R), expected);
  EXPECT_EQ(units(R).size(), 8u);
}

TEST(Units, AgreeWithInverseSearch) {
  for (const auto& entry : testing_corpus::load_all())
    EXPECT_EQ(units(entry.ring.ring()), oracle::units(entry.ring.ring()))
        << entry.label;
}

TEST(Radical, SmallRings) {
  StarRing P = make_product({make_modular(2), make_modular(2)});
  EXPECT_EQ(jacobson_radical(P).members, (ElementSet{0}));
  EXPECT_EQ(jacobson_radical(make_modular(4)).members, (ElementSet{0, 2}));
  EXPECT_EQ(prime_radical(P).members, (ElementSet{0}));
  EXPECT_EQ(prime_radical(make_modular(4)).members, (ElementSet{0, 2}));
}

TEST(Radical, TrivialExtensionExample) {
  auto t = testing_corpus::load("t2_example");
  EXPECT_EQ(jacobson_radical(t.ring).members,
            labelled(t.ring, {"((0,0),(0,0))", "((0,0),(0,1))", "((0,0),(1,0))",
                              "((0,0),(1,1))"}));
}

TEST(Radical, MatchesMaximalLeftIdealIntersection) {
  for (const auto& entry : testing_corpus::load_all()) {
    const FiniteRing& R = entry.ring.ring();
    EXPECT_EQ(jacobson_radical(R).members, oracle::jacobson(R)) << entry.label;
  }
  StarRing M = make_matrix(make_modular(2), 2);
  EXPECT_EQ(jacobson_radical(M).members, oracle::jacobson(M.ring()));
  EXPECT_EQ(jacobson_radical(M).members, (ElementSet{0}));
}

TEST(Radical, PrimeEqualsJacobsonAndIsStarClosed) {
  for (const auto& entry : testing_corpus::load_all()) {
    Ideal J = jacobson_radical(entry.ring);
    EXPECT_EQ(prime_radical(entry.ring).members, J.members) << entry.label;
    EXPECT_TRUE(J.star_closed) << entry.label;
  }
}

TEST(Idempotents, AgreeWithSquaring) {
  for (const auto& entry : testing_corpus::load_all())
    EXPECT_EQ(idempotents(entry.ring.ring()),
              oracle::idempotents(entry.ring.ring()))
        << entry.label;
}

TEST(Idempotents, ProjectionsOfBooleanExample) {
  auto e = testing_corpus::load("ex34");
  EXPECT_EQ(idempotents(e.ring.ring()).size(), 4u);
  EXPECT_EQ(projections(e.ring), labelled(e.ring, {"0", "I"}));
}

TEST(Center, TriangularAndExample) {
  auto t = testing_corpus::load("t2z2_triangular");
  EXPECT_EQ(center_elements(t.ring.ring()),
            labelled(t.ring, {"[[0,0],[0,0]]", "[[1,0],[0,1]]"}));
  Center C = center(t.ring);
  EXPECT_EQ(C.ring.order(), 2u);
  auto z6 = testing_corpus::load("z6");
  EXPECT_EQ(center_elements(z6.ring.ring()).size(), 6u);
}

TEST(Ideals, ModularLatticeIsDivisorLattice) {
  // Ideals of Z_n correspond to divisors of n.
  for (std::size_t n : {2, 4, 6, 8, 9, 12}) {
    std::size_t divisors = 0;
    for (std::size_t d = 1; d <= n; ++d) divisors += n % d == 0;
    EXPECT_EQ(ideals(make_modular(n).ring()).size(), divisors) << n;
  }
  auto maximal = maximal_ideals(make_modular(6).ring());
  ASSERT_EQ(maximal.size(), 2u);
  EXPECT_EQ(maximal[0].members, (ElementSet{0, 2, 4}));
  EXPECT_EQ(maximal[1].members, (ElementSet{0, 3}));
  EXPECT_THROW(ideals(make_modular(8).ring(), 4), OrderBoundExceeded);
}

TEST(Ideals, SimpleMatrixRing) {
  StarRing M = make_matrix(make_modular(2), 2);
  EXPECT_EQ(ideals(M.ring()).size(), 2u);
  auto maximal = maximal_ideals(M.ring());
  ASSERT_EQ(maximal.size(), 1u);
  EXPECT_EQ(maximal[0].members, (ElementSet{0}));
}

TEST(Lifting, Examples) {
  auto z4 = make_modular(4);
  EXPECT_TRUE(lifts_idempotents(z4.ring(), {0}));
  EXPECT_TRUE(lifts_idempotents(z4.ring(), {0, 2}));
  auto t = testing_corpus::load("t2_example");
  EXPECT_TRUE(lifts_idempotents(t.ring.ring(), jacobson_radical(t.ring).members));
  EXPECT_THROW(lifts_idempotents(z4.ring(), {0, 1}), NotIdeal);
}

TEST(UnitSets, RadicalCharacterizations) {
  auto z4 = make_modular(4);
  EXPECT_EQ(one_minus_unit_set(z4.ring()), (ElementSet{0, 2}));
  EXPECT_EQ(one_plus_norm_unit_set(z4), (ElementSet{0, 2}));
  auto z6 = make_modular(6);
  EXPECT_EQ(one_minus_unit_set(z6.ring()), (ElementSet{0, 2}));
  EXPECT_TRUE(one_is_sum_of_two_units(make_modular(3).ring()));
  EXPECT_FALSE(one_is_sum_of_two_units(z4.ring()));
  EXPECT_TRUE(unit_group_is_torsion(make_modular(9).ring()));
}

TEST(Flags, CorpusSpotChecks) {
  auto z2 = classify_flags(testing_corpus::load("z2").ring);
  EXPECT_TRUE(z2.boolean_ring && z2.star_boolean && z2.local && z2.regular &&
              z2.star_regular && z2.abelian);
  auto ex = classify_flags(testing_corpus::load("ex34").ring);
  EXPECT_TRUE(ex.boolean_ring);
  EXPECT_FALSE(ex.star_boolean);
  EXPECT_FALSE(ex.star_regular);
  EXPECT_TRUE(ex.regular);
  auto t = classify_flags(testing_corpus::load("t2_example").ring);
  EXPECT_FALSE(t.abelian);
  EXPECT_FALSE(t.center_plus_radical_is_all);
  EXPECT_TRUE(t.two_in_radical);
  auto z9 = classify_flags(testing_corpus::load("z9").ring);
  EXPECT_FALSE(z9.two_in_radical);
  EXPECT_TRUE(z9.local);
  for (const auto& entry : testing_corpus::load_all())
    EXPECT_TRUE(classify_flags(entry.ring).directly_finite) << entry.label;
}

}  // namespace
}  // namespace starclean
