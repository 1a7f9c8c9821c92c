#include <gtest/gtest.h>

#include "sammy/sammy.hpp"
#include "support/family.hpp"

using namespace sammy;

TEST(Builders, SizesOfStandardCategories) {
  EXPECT_EQ(emptyCategory()->objectCount(), 0);
  EXPECT_EQ(terminalCategory()->morphismCount(), 1);
  EXPECT_EQ(arrowCategory()->morphismCount(), 3);
  EXPECT_EQ(isoCategory()->morphismCount(), 4);
  EXPECT_EQ(chainCategory(2)->objectCount(), 3);
  EXPECT_EQ(chainCategory(2)->morphismCount(), 6);
  EXPECT_EQ(threeDot()->morphismCount(), 7);
  EXPECT_EQ(threeHat()->morphismCount(), 9);
  EXPECT_EQ(discreteCategory(4)->morphismCount(), 4);
}

TEST(Builders, ArrowCategoryLayout) {
  const auto two = arrowCategory();
  EXPECT_EQ(two->identity(0), 0);
  EXPECT_EQ(two->identity(1), 2);
  EXPECT_EQ(two->src(1), 0);
  EXPECT_EQ(two->tgt(1), 1);
  EXPECT_FALSE(two->isIsomorphism(1));
  EXPECT_TRUE(isoCategory()->isIsomorphism(isoCategory()->between(0, 1)));
}

TEST(Category, ComposeReturnsMinusOneWhenNotComposable) {
  const auto two = arrowCategory();
  EXPECT_EQ(two->compose(1, 0), -1);
  EXPECT_EQ(two->compose(0, 1), 1);
  EXPECT_EQ(two->compose(1, 2), 1);
}

TEST(Category, MakeDetectsThinness) {
  EXPECT_TRUE(Category::make(2, {{0, 0}, {0, 1}, {1, 1}}, {0, 2}, [](int f, int g) { return f == 0 ? g : f; })
                  ->isThin());
  EXPECT_FALSE(sammy::testing::parallelPair()->isThin());
}

TEST(Category, ThinRejectsParallelMorphisms) {
  try {
    Category::thin(2, {{0, 0}, {1, 1}, {0, 1}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Format);
  }
}

TEST(Limits, ScopeOverridesAndRestores) {
  const auto before = limits().maxObjects;
  {
    Limits l;
    l.maxObjects = 3;
    LimitScope scope(l);
    EXPECT_EQ(limits().maxObjects, 3u);
    try {
      chainCategory(5);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
    }
  }
  EXPECT_EQ(limits().maxObjects, before);
}

TEST(Error, WhatCarriesKindAndMessageDoesNot) {
  const Error e(ErrorKind::NoRule, "state q reading 1");
  EXPECT_EQ(std::string(e.what()), "NoRule: state q reading 1");
  EXPECT_EQ(e.message(), "state q reading 1");
}

TEST(Validate, FamilyIsValid) {
  for (const auto& c : sammy::testing::smallFamily()) EXPECT_TRUE(validate(c).ok());
}

TEST(Validate, BrokenAssociativityIsReported) {
  // One object, unit 0, and a multiplication table on {a, b} that is not
  // associative.
  const int table[3][3] = {{0, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  const auto c = Category::make(1, {{0, 0}, {0, 0}, {0, 0}}, {0}, [&](int f, int g) { return table[f][g]; });
  const auto r = validate(c);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has("associativity"));
}

TEST(Validate, NonFunctorIsReported) {
  // Sends the arrow of 2 to an identity while moving its endpoints apart.
  Functor f{arrowCategory(), arrowCategory(), {0, 1}, {0, 0, 2}};
  EXPECT_FALSE(validate(f).ok());
  EXPECT_TRUE(validate(identityFunctor(arrowCategory())).ok());
}

TEST(Validate, NonNaturalTransformationIsReported) {
  // The component at 1 must be an arrow 0 -> 1, not the identity of 0.
  const auto two = arrowCategory();
  const Functor id = identityFunctor(two);
  NatTrans t{id, id, {0, 2}};
  EXPECT_TRUE(validate(t).ok());
  NatTrans bad{constantFunctor(two, two, 0), id, {0, 0}};
  EXPECT_FALSE(validate(bad).ok());
}

TEST(Iso, TwoIsIsomorphicToItsOpposite) {
  const auto w = categoriesIsomorphic(arrowCategory(), op0(arrowCategory()));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(validate(w->forward).ok());
  EXPECT_TRUE(sameFunctor(comp(w->forward, w->backward), identityFunctor(arrowCategory())));
}

TEST(Iso, DistinguishesSameCounts) {
  EXPECT_FALSE(categoriesIsomorphic(chainCategory(2), discreteCategory(3)).has_value());
  EXPECT_FALSE(categoriesIsomorphic(arrowCategory(), isoCategory()).has_value());
  // Both have one object and three morphisms.
  const auto order3 = sammy::testing::monoids(3);
  ASSERT_GE(order3.size(), 2u);
  EXPECT_FALSE(categoriesIsomorphic(order3[0], order3[1]).has_value());
}

TEST(Iso, FamilyMembersArePairwiseDistinct) {
  const auto& f = sammy::testing::smallFamily();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      EXPECT_EQ(categoriesIsomorphic(f[i], f[j]).has_value(), i == j) << i << " vs " << j;
}

TEST(Iso, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(arrowCategory()).size(), 1u);
  EXPECT_EQ(automorphisms(discreteCategory(3)).size(), 6u);
  EXPECT_EQ(automorphisms(isoCategory()).size(), 2u);
}

TEST(Serialize, RoundTripsEveryKind) {
  for (const auto& c : sammy::testing::smallFamily()) {
    const Value back = parseValue(toJson(c).dump());
    EXPECT_TRUE(structuresEqual(c, back));
  }
  const Functor p = pointerFunctor(chainCategory(2), 1);
  EXPECT_TRUE(structuresEqual(p, parseValue(toJson(p).dump())));
  const auto two = arrowCategory();
  const NatTrans t{constantFunctor(two, two, 0), identityFunctor(two), {0, 1}};
  EXPECT_TRUE(structuresEqual(t, parseValue(toJson(t).dump())));
}

TEST(Serialize, MalformedInputIsFormatError) {
  for (const std::string text : {"{", "{\"kind\": \"category\"}", "{\"kind\": \"widget\"}",
                                 "{\"kind\":\"category\",\"objects\":[0],\"morphisms\":[{\"id\":3,\"src\":0,\"tgt\":0}]}"}) {
    try {
      parseValue(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Format) << text;
    }
  }
}

TEST(Serialize, DotDrawsIndecomposableArrowsOnly) {
  const std::string dot = toDot(*chainCategory(2), "C");
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2"), std::string::npos);
  EXPECT_EQ(dot.find("0 -> 2"), std::string::npos);
}
