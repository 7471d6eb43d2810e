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
#include "starclean/cleanness.hpp"
#include "starclean/constructors.hpp"

namespace starclean {
namespace {

std::vector<std::pair<Element, Element>> pairs(
    const std::vector<CleanWitness>& ws) {
  std::vector<std::pair<Element, Element>> out;
  for (const auto& w : ws) out.emplace_back(w.companion, w.complement);
  return out;
}

TEST(Variants, NamesRoundTrip) {
  for (Variant v : kAllVariants)
    EXPECT_EQ(parse_variant(variant_name(v)), std::optional<Variant>(v));
  EXPECT_FALSE(parse_variant("clean").has_value());
  EXPECT_FALSE(parse_variant("").has_value());
}

TEST(Witnesses, CleanDecompositionsInZ6) {
  auto ws = witnesses(make_modular(6), 2, Variant::Clean);
  EXPECT_EQ(pairs(ws), (std::vector<std::pair<Element, Element>>{{1, 1}, {3, 5}}));
  for (const auto& w : ws) EXPECT_TRUE(w.commutes);
}

TEST(Witnesses, StronglyJStarCleanInZ4) {
  auto ws = witnesses(make_modular(4), 3, Variant::StronglyJStarClean);
  EXPECT_EQ(pairs(ws), (std::vector<std::pair<Element, Element>>{{1, 2}}));
}

TEST(Witnesses, ZeroAlwaysDecomposes) {
  for (const auto& entry : testing_corpus::load_all()) {
    auto ws = witnesses(entry.ring, entry.ring.ring().zero(), Variant::JStarClean);
    ASSERT_FALSE(ws.empty()) << entry.label;
    EXPECT_EQ(ws[0].companion, entry.ring.ring().zero());
    EXPECT_EQ(ws[0].complement, entry.ring.ring().zero());
  }
}

TEST(Witnesses, RejectsOutOfRangeElement) {
  EXPECT_THROW(witnesses(make_modular(4), 9, Variant::Clean), ShapeError);
}

TEST(Decide, WorkedExamples) {
  auto t = testing_corpus::load("t2_example");
  EXPECT_TRUE(decide(t.ring, Variant::JStarClean).holds);
  EXPECT_FALSE(decide(t.ring, Variant::StronglyJStarClean).holds);
  auto ex = testing_corpus::load("ex34");
  EXPECT_FALSE(decide(ex.ring, Variant::StarClean).holds);
  EXPECT_TRUE(decide(ex.ring, Variant::UniquelyStronglyClean).holds);
  auto tri = testing_corpus::load("t2z2_triangular");
  EXPECT_TRUE(decide(tri.ring, Variant::StronglyJClean).holds);
  EXPECT_TRUE(decide(make_modular(2), Variant::StronglyJStarClean).holds);
}

TEST(Decide, UniquenessFailureReportsCount) {
  DecisionReport d = decide(make_modular(6), Variant::UniquelyClean);
  EXPECT_FALSE(d.holds);
  ASSERT_TRUE(d.first_failure.has_value());
  EXPECT_EQ(d.first_failure->element, 2u);
  EXPECT_EQ(d.first_failure->witness_count, 2u);
  EXPECT_TRUE(d.failures.empty());
}

TEST(Decide, ExhaustiveListsEveryFailure) {
  StarRing z6 = make_modular(6);
  DecisionReport d = decide(z6, Variant::UniquelyClean, /*exhaustive=*/true);
  ASSERT_FALSE(d.failures.empty());
  EXPECT_EQ(d.failures.front(), *d.first_failure);
  for (const auto& f : d.failures)
    EXPECT_NE(witnesses(z6, f.element, Variant::UniquelyClean).size(), 1u);
  std::size_t expected = 0;
  for (Element a = 0; a < 6; ++a)
    expected += witnesses(z6, a, Variant::UniquelyClean).size() != 1;
  EXPECT_EQ(d.failures.size(), expected);
}

TEST(Decide, MatchesDefinitionalCount) {
  for (const auto& entry : testing_corpus::load_all()) {
    const FiniteRing& R = entry.ring.ring();
    const auto J = oracle::jacobson(R);
    CleanContext ctx(entry.ring);
    for (Variant v : kAllVariants) {
      VariantRules r = rules(v);
      oracle::Rules o{r.projection, r.radical, r.commute, r.star_twist};
      bool holds = true;
      for (Element a = 0; a < R.order(); ++a) {
        std::size_t n = oracle::count_decompositions(
            R, entry.ring.involution().map(), J, a, o);
        ASSERT_EQ(ctx.witnesses(a, v).size(), n)
            << entry.label << " " << variant_name(v) << " a=" << a;
        holds = holds && (r.unique ? n == 1 : n >= 1);
      }
      EXPECT_EQ(decide(ctx, v).holds, holds)
          << entry.label << " " << variant_name(v);
    }
  }
}

TEST(Projectionize, FixesProjections) {
  for (const auto& entry : testing_corpus::load_all())
    for (Element e : projections(entry.ring))
      EXPECT_EQ(projectionize(entry.ring, e), e) << entry.label;
}

TEST(Projectionize, TrivialExtensionExample) {
  auto t = testing_corpus::load("t2_example");
  const FiniteRing& R = t.ring.ring();
  Element e = *R.find("((1,0),(1,0))");
  Element f = projectionize(t.ring, e);
  EXPECT_EQ(R.label(f), "((1,0),(1,1))");
  // Here (e* - e)(e - e*) = 0, so f = e* e by direct table arithmetic.
  Element es = t.ring.star(e);
  Element d = oracle::add(R, e, R.neg(es));
  EXPECT_EQ(oracle::mul(R, R.neg(d), d), R.zero());
  EXPECT_EQ(oracle::mul(R, es, e), f);
}

TEST(Projectionize, Preconditions) {
  auto ex = testing_corpus::load("ex34");
  EXPECT_THROW(projectionize(ex.ring, *ex.ring.ring().find("E")),
               RadicalPreconditionFailed);
  EXPECT_THROW(projectionize(make_modular(4), 2), NotIdempotent);
  EXPECT_THROW(projectionize(make_modular(4), 7), ShapeError);
}

TEST(Projectionize, ContractOnCorpus) {
  for (const auto& entry : testing_corpus::load_all()) {
    const StarRing& S = entry.ring;
    const FiniteRing& R = S.ring();
    const auto J = oracle::jacobson(R);
    auto inJ = [&](Element x) {
      return std::binary_search(J.begin(), J.end(), x);
    };
    for (Element e : oracle::idempotents(R)) {
      if (!inJ(R.sub(e, S.star(e)))) continue;
      Element f = projectionize(S, e);
      EXPECT_EQ(oracle::mul(R, f, f), f);
      EXPECT_EQ(S.star(f), f);
      EXPECT_EQ(oracle::mul(R, f, e), f);
      EXPECT_EQ(oracle::mul(R, e, f), e);
      EXPECT_TRUE(inJ(R.sub(e, f))) << entry.label;
    }
  }
}

}  // namespace
}  // namespace starclean
