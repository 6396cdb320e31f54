// Copyright 2026 The Parcoh Authors
//
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

#include <algorithm>

#include "corpus.h"
#include "oracles.h"
#include "parcoh/constructions.h"
#include "parcoh/errors.h"
#include "parcoh/extensions.h"
#include "parcoh/homotopy.h"

namespace parcoh {
namespace {

bool has_condition(const TwistingReport& r, TwistingCondition c) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const TwistingViolation& v) { return v.condition == c; });
}

// eta'(g, h) = c(g) t(g)(c(h)) eta(g, h) c(gh)^-1 for central c with c(1) = 1.
TwistingPair perturb(const TwistingPair& p, const std::vector<ElementId>& c) {
  const PartialGroup& m = p.fiber;
  TwistingPair q = p;
  const auto& words = p.base.words(2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const ElementId g = words[i][0], h = words[i][1];
    const ElementId gh = p.base.product(g, h);
    q.eta[i] = m.product(m.product(c[g], p.t[g][c[h]]), m.product(p.eta[i], m.inverse(c[gh])));
  }
  return q;
}

TEST(TwistingPair, TrivialPairsAreValid) {
  for (const auto& nt : testing::table_corpus(3)) {
    const PartialGroup z2 = bar(FiniteGroup::cyclic(2), 3);
    EXPECT_TRUE(validate_twisting_pair(trivial_twisting_pair(nt.table, z2)).ok()) << nt.name;
    EXPECT_TRUE(validate_twisting_pair(trivial_twisting_pair(z2, nt.table)).ok()) << nt.name;
  }
}

TEST(TwistingPair, FreeBaseWithPointedT) {
  for (const OuterAction& a :
       enumerate_outer_actions(free_partial_group({"x"}), free_partial_group({"a", "b"}))) {
    EXPECT_TRUE(validate_twisting_pair(a.pair).ok());
  }
}

TEST(TwistingPair, SquareCocycleIsValid) {
  EXPECT_TRUE(validate_twisting_pair(testing::z4_pair()).ok());
}

TEST(TwistingPair, ReportsEachCondition) {
  const PartialGroup z2 = bar(FiniteGroup::cyclic(2));
  const PartialGroup z3 = bar(FiniteGroup::cyclic(3));

  TwistingPair unit = trivial_twisting_pair(z2, z3);
  unit.t[kUnit] = {0, 2, 1};
  EXPECT_TRUE(has_condition(validate_twisting_pair(unit), TwistingCondition::kUnit));

  TwistingPair cocycle = trivial_twisting_pair(z3, z2);
  cocycle.eta[z3.index_of_checked(Word{1, 1})] = 1;
  const TwistingReport r = validate_twisting_pair(cocycle);
  EXPECT_TRUE(has_condition(r, TwistingCondition::kCocycle));
  EXPECT_FALSE(has_condition(r, TwistingCondition::kHomotopy));

  const PartialGroup fa = free_partial_group({"a"});
  TwistingPair outside = trivial_twisting_pair(z2, fa);
  outside.eta[z2.index_of_checked(Word{1, 1})] = 1;
  EXPECT_TRUE(has_condition(validate_twisting_pair(outside), TwistingCondition::kHomotopy));
}

TEST(TwistingPair, BadShapeIsStructural) {
  TwistingPair p = testing::z4_pair();
  p.eta.pop_back();
  EXPECT_THROW(validate_twisting_pair(p), StructuralError);
}

TEST(TwistedProduct, TrivialPairIsCartesian) {
  for (const auto& np : testing::twisting_pair_corpus(3)) {
    const TwistingPair& p = np.pair;
    const TwistingPair trivial = trivial_twisting_pair(p.base, p.fiber);
    EXPECT_TRUE(twisted_product(trivial).total == product(p.fiber, p.base)) << np.name;
  }
}

TEST(TwistedProduct, SquareCocycleGivesZ4) {
  const ExtensionTable e = twisted_product(testing::z4_pair());
  EXPECT_TRUE(validate(e.total).ok());
  EXPECT_TRUE(find_isomorphism(e.total, bar(FiniteGroup::cyclic(4))).has_value());
}

TEST(TwistedProduct, SwapOnFreeFiber) {
  const ExtensionTable e = twisted_product(testing::swap_pair());
  EXPECT_EQ(e.total.size(), 6u);
  EXPECT_TRUE(validate(e.total).ok());
  EXPECT_TRUE(check_extension(e));
}

TEST(TwistedProduct, InvalidPairIsRefused) {
  TwistingPair p = trivial_twisting_pair(bar(FiniteGroup::cyclic(3)), bar(FiniteGroup::cyclic(2)));
  p.eta[p.base.index_of_checked(Word{1, 1})] = 1;
  EXPECT_THROW(twisted_product(p), PreconditionError);
  EXPECT_THROW(twisted_product(testing::z4_pair(3), 4), TruncationError);
}

TEST(TwistedProduct, ElementNames) {
  const ExtensionTable e = twisted_product(testing::swap_pair());
  EXPECT_EQ(e.total.name(kUnit), "1");
  EXPECT_EQ(e.total.name(twisted_element(testing::swap_pair(), 1, 1)), "(a,g)");
}

TEST(CheckExtension, RejectsWrongProjection) {
  ExtensionTable e = twisted_product(testing::s3_pair());
  std::fill(e.projection.begin(), e.projection.end(), kUnit);
  EXPECT_FALSE(check_extension(e));
}

TEST(Equivalence, Examples) {
  const ExtensionTable z4 = twisted_product(testing::z4_pair());
  const PartialGroup z2 = bar(FiniteGroup::cyclic(2));
  const ExtensionTable v4 = twisted_product(trivial_twisting_pair(z2, z2));
  EXPECT_TRUE(extension_equivalent(z4, z4));
  EXPECT_FALSE(extension_equivalent(z4, v4));
  EXPECT_THROW(extension_equivalent(z4, twisted_product(testing::s3_pair())), StructuralError);
}

TEST(Equivalence, CohomologousEtaIsEquivalent) {
  const PartialGroup z2 = bar(FiniteGroup::cyclic(2), 3);
  const PartialGroup z4 = bar(FiniteGroup::cyclic(4), 3);
  TwistingPair twisted = trivial_twisting_pair(z2, z4);
  twisted.eta[z2.index_of_checked(Word{1, 1})] = 1;
  std::vector<TwistingPair> starts = {trivial_twisting_pair(z2, z4), twisted,
                                      testing::s3_pair(3)};
  for (const TwistingPair& p : starts) {
    const ExtensionTable e = twisted_product(p);
    for (ElementId c = 0; c < p.fiber.size(); ++c) {
      const TwistingPair q = perturb(p, {kUnit, c});
      ASSERT_TRUE(validate_twisting_pair(q).ok());
      EXPECT_TRUE(extension_equivalent(e, twisted_product(q))) << "c(g) = " << c;
    }
  }
}

TEST(OuterActions, Counts) {
  EXPECT_EQ(enumerate_outer_actions(free_partial_group({}), free_partial_group({"a"})).size(), 1u);
  EXPECT_EQ(enumerate_outer_actions(free_partial_group({"x"}), free_partial_group({"a"})).size(),
            2u);
  EXPECT_EQ(
      enumerate_outer_actions(free_partial_group({"x"}), free_partial_group({"a", "b"})).size(),
      8u);
  EXPECT_THROW(enumerate_outer_actions(bar(FiniteGroup::cyclic(2)), free_partial_group({"a"})),
               StructuralError);
}

TEST(FreeExtensions, Counts) {
  EXPECT_EQ(count_free_extensions(1, 1).enumerated, 2);
  EXPECT_EQ(count_free_extensions(1, 2).enumerated, 8);
  for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(count_free_extensions(0, k).enumerated, 1);
}

TEST(CenterModule, CyclicFiber) {
  const PartialGroup z2 = bar(FiniteGroup::cyclic(2));
  const PartialGroup z4 = bar(FiniteGroup::cyclic(4));
  const CenterModule cm =
      center_module(z2, z4, std::vector<ElementMap>(2, identity_map(z4)));
  EXPECT_EQ(cm.action.coeffs.to_string(), "Z/4");
  EXPECT_EQ(cm.elements.size(), 4u);
  EXPECT_TRUE(validate_action(cm.action));
}

TEST(CenterModule, InversionActsByNegation) {
  const TwistingPair p = testing::s3_pair();
  const CenterModule cm = center_module(p.base, p.fiber, p.t);
  ASSERT_EQ(cm.action.coeffs.to_string(), "Z/3");
  EXPECT_TRUE(cm.action.phi[1].equals(AbHom(cm.action.coeffs, cm.action.coeffs, IntMatrix{{-1}})));
}

TEST(Classify, GroupExamples) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const ExtensionClassification a = classify_group_extensions(z2, z2, {});
  EXPECT_EQ(a.representatives.size(), 2u);
  EXPECT_EQ(a.h2.to_string(), "Z/2");

  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const PartialGroup bz3 = bar(z3, 3);
  const ElementMap inversion = testing::bar_map(z3, {0, 2, 1});
  const ExtensionClassification b =
      classify_group_extensions(z3, z2, {identity_map(bz3), inversion});
  ASSERT_EQ(b.representatives.size(), 1u);
  EXPECT_TRUE(b.h2.is_trivial());
  EXPECT_TRUE(find_isomorphism(b.representatives[0].total, bar(FiniteGroup::symmetric3(), 3)));

  const ExtensionClassification c = classify_group_extensions(z3, FiniteGroup::trivial(), {});
  ASSERT_EQ(c.representatives.size(), 1u);
  EXPECT_TRUE(find_isomorphism(c.representatives[0].total, bz3));
}

TEST(Classify, NonInnerUnitIsStructural) {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const ElementMap inversion = testing::bar_map(z3, {0, 2, 1});
  EXPECT_THROW(classify_group_extensions(z3, FiniteGroup::cyclic(2), {inversion, inversion}),
               StructuralError);
}

TEST(Classify, NeedsDegreeThree) {
  const PartialGroup z2 = bar(FiniteGroup::cyclic(2), 2);
  EXPECT_THROW(classify_extensions(z2, z2, std::vector<ElementMap>(2, identity_map(z2))),
               TruncationError);
}

}  // namespace
}  // namespace parcoh
