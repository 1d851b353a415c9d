#include "wgap/analysis.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "wgap/enumerator.hpp"

namespace wgap {
namespace {

using Gaps = std::vector<Order>;

GapSequence valid(Genus g, Gaps gaps) {
  return std::get<GapSequence>(validate(g, gaps));
}

Gaps listOf(const GapSequence& s) { return {s.gaps().begin(), s.gaps().end()}; }

TEST(WeightTest, Examples) {
  EXPECT_EQ(weight(valid(3, {1, 2, 3})), 0);
  EXPECT_EQ(weight(valid(3, {1, 3, 5})), 3);
  EXPECT_EQ(weight(valid(4, {1, 2, 3, 5})), 1);
  EXPECT_EQ(weight(valid(0, {})), 0);
}

TEST(ClassifyTest, Examples) {
  auto hyper = classify(valid(3, {1, 3, 5}));
  EXPECT_EQ(hyper.classification, Classification::Hyperelliptic);
  EXPECT_EQ(hyper.weight, 3);
  EXPECT_EQ(hyper.firstNonGap, 2);
  EXPECT_TRUE(hyper.isWeierstrass);

  auto exceptional = classify(valid(3, {1, 2, 4}));
  EXPECT_EQ(exceptional.classification, Classification::Exceptional);
  EXPECT_EQ(exceptional.weight, 1);

  auto torus = classify(valid(1, {1}));
  EXPECT_EQ(torus.classification, Classification::Ordinary);
  EXPECT_EQ(torus.weight, 0);
  EXPECT_FALSE(torus.isWeierstrass);

  auto sphere = classify(valid(0, {}));
  EXPECT_EQ(sphere.classification, Classification::Rational);
  EXPECT_FALSE(sphere.firstNonGap.has_value());

  EXPECT_EQ(classify(valid(3, {1, 2, 5})).classification,
            Classification::GenericWeierstrass);
}

TEST(ClassifyTest, GenusTwoTieBreak) {
  auto r = classify(valid(2, {1, 3}));
  EXPECT_EQ(r.classification, Classification::Hyperelliptic);
  EXPECT_TRUE(r.exceptionalShape);
  EXPECT_EQ(classify(valid(2, {1, 2})).classification, Classification::Ordinary);
  EXPECT_FALSE(classify(valid(3, {1, 3, 5})).exceptionalShape);
}

TEST(ClassifyTest, ReportInvariantsHoldExhaustively) {
  for (Genus g = 0; g <= 10; ++g) {
    for (const auto& seq : treeEnumerate(g).sequences) {
      const auto r = classify(seq);
      EXPECT_EQ(r.isWeierstrass, r.weight > 0);
      EXPECT_EQ(r.classification == Classification::Ordinary, r.weight == 0 && g >= 1);
      EXPECT_EQ(r.classification == Classification::Rational, g == 0);
      if (r.classification == Classification::Hyperelliptic) {
        EXPECT_EQ(r.firstNonGap, 2);
        EXPECT_GE(g, 2);
      }
    }
  }
}

TEST(ClassificationLabelTest, RoundTrip) {
  for (auto c : {Classification::Rational, Classification::Ordinary,
                 Classification::Hyperelliptic, Classification::Exceptional,
                 Classification::GenericWeierstrass}) {
    EXPECT_EQ(parseClassification(toString(c)), c);
  }
  EXPECT_EQ(std::string(toString(Classification::GenericWeierstrass)), "generic-weierstrass");
  EXPECT_FALSE(parseClassification("Ordinary").has_value());
}

TEST(SpecialSequencesTest, Hyperelliptic) {
  EXPECT_EQ(listOf(hyperellipticSequence(3)), (Gaps{1, 3, 5}));
  EXPECT_EQ(listOf(hyperellipticSequence(2)), (Gaps{1, 3}));
  const auto six = hyperellipticSequence(6);
  EXPECT_EQ(listOf(six), (Gaps{1, 3, 5, 7, 9, 11}));
  const auto set = nonGaps(six);
  const auto ng = set.nonGaps();
  EXPECT_EQ(Gaps(ng.begin(), ng.begin() + 3), (Gaps{2, 4, 6}));
  EXPECT_THROW(hyperellipticSequence(1), Error);
}

TEST(SpecialSequencesTest, Exceptional) {
  EXPECT_EQ(listOf(exceptionalSequence(4)), (Gaps{1, 2, 3, 5}));
  EXPECT_EQ(listOf(exceptionalSequence(2)), (Gaps{1, 3}));
  EXPECT_EQ(listOf(exceptionalSequence(3)), (Gaps{1, 2, 4}));
  EXPECT_THROW(exceptionalSequence(0), Error);
}

TEST(SpecialSequencesTest, FormulasAndValidity) {
  for (Genus g = 2; g <= 50; ++g) {
    const auto h = hyperellipticSequence(g);
    const auto e = exceptionalSequence(g);
    EXPECT_TRUE(std::holds_alternative<GapSequence>(validate(g, listOf(h))));
    EXPECT_TRUE(std::holds_alternative<GapSequence>(validate(g, listOf(e))));
    EXPECT_EQ(weight(h), g * (g - 1) / 2);
    EXPECT_EQ(weight(e), 1);
  }
}

TEST(BoundsTest, Examples) {
  auto two = pointCountBounds(2);
  EXPECT_EQ(two.lower, 6);
  EXPECT_EQ(two.upper, 6);
  auto three = pointCountBounds(3);
  EXPECT_EQ(three.lower, 8);
  EXPECT_EQ(three.upper, 24);
  auto six = pointCountBounds(6);
  EXPECT_EQ(six.lower, 14);
  EXPECT_EQ(six.upper, 210);
  EXPECT_EQ(six.totalWeight, 210);
  EXPECT_THROW(pointCountBounds(1), Error);
  EXPECT_THROW(pointCountBounds(kMaxFormulaGenus + 1), Error);
  const auto top = pointCountBounds(kMaxFormulaGenus);
  EXPECT_EQ(top.upper, (kMaxFormulaGenus - 1) * kMaxFormulaGenus * (kMaxFormulaGenus + 1));
}

TEST(BoundsTest, ImpliedHyperellipticCount) {
  EXPECT_EQ(impliedHyperellipticPointCount(2), 6);
  EXPECT_EQ(impliedHyperellipticPointCount(3), 8);
  EXPECT_EQ(impliedHyperellipticPointCount(10), 22);
  for (Genus g = 2; g <= 1000; ++g) {
    EXPECT_EQ(impliedHyperellipticPointCount(g), pointCountBounds(g).lower);
  }
  EXPECT_THROW(impliedHyperellipticPointCount(1), Error);
}

TEST(JenkinsTest, Examples) {
  EXPECT_TRUE(jenkinsForcedGap(2, 3, 2));
  EXPECT_FALSE(jenkinsForcedGap(3, 4, 3));
  for (Genus g = 1; g <= 40; ++g) {
    if (2 * g - 1 >= 2) EXPECT_TRUE(jenkinsForcedGap(2, 2 * g - 1, g)) << g;
  }
}

TEST(JenkinsTest, ExampleSequencesAgree) {
  // Genus 2 with first non-gap 2 is {1,3}: 3 is indeed a gap.
  auto h2 = filterEnumerate(2, FirstNonGapIs{2}).sequences;
  ASSERT_EQ(h2.size(), 1U);
  EXPECT_TRUE(h2.front().isGap(3));
  // {1,2,5}: first non-gap 3, and 4 is a non-gap, consistent with not forced.
  EXPECT_FALSE(valid(3, {1, 2, 5}).isGap(4));
}

TEST(JenkinsTest, PreconditionErrors) {
  EXPECT_THROW(jenkinsForcedGap(2, 4, 3), Error);
  EXPECT_THROW(jenkinsForcedGap(1, 4, 3), Error);
  EXPECT_THROW(jenkinsForcedGap(3, 1, 3), Error);
  EXPECT_THROW(jenkinsForcedGap(3, 4, 0), Error);
}

TEST(JenkinsTest, CrossValidatedExhaustively) {
  for (Genus g = 1; g <= 10; ++g) {
    for (const auto& seq : treeEnumerate(g).sequences) {
      const Order h = firstNonGap(seq);
      for (Order k = 2; k <= 2 * g - 1; ++k) {
        if (std::gcd(h, k) != 1) continue;
        if (jenkinsForcedGap(h, k, g)) {
          EXPECT_TRUE(seq.isGap(k)) << "g=" << g << " h=" << h << " k=" << k;
        }
      }
    }
  }
}

TEST(WeightProperties, MaximumOnlyAtHyperelliptic) {
  for (Genus g = 2; g <= 10; ++g) {
    const auto cap = g * (g - 1) / 2;
    int atCap = 0;
    for (const auto& seq : treeEnumerate(g).sequences) {
      const auto w = weight(seq);
      EXPECT_GE(w, 0);
      EXPECT_LE(w, cap);
      if (w == cap) {
        ++atCap;
        EXPECT_EQ(seq, hyperellipticSequence(g));
      }
    }
    EXPECT_EQ(atCap, 1);
  }
}

}  // namespace
}  // namespace wgap
