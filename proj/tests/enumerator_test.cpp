#include "wgap/enumerator.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace wgap {
namespace {

using Gaps = std::vector<Order>;

std::vector<Gaps> asLists(const std::vector<GapSequence>& seqs) {
  std::vector<Gaps> out;
  for (const auto& s : seqs) out.emplace_back(s.gaps().begin(), s.gaps().end());
  return out;
}

TEST(BruteForceTest, GenusThreeMatchesKnownList) {
  const auto r = bruteForceEnumerate(3);
  EXPECT_EQ(r.count, 4U);
  EXPECT_EQ(asLists(r.sequences),
            (std::vector<Gaps>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}}));
}

TEST(BruteForceTest, SmallGenera) {
  const auto zero = bruteForceEnumerate(0);
  EXPECT_EQ(zero.count, 1U);
  EXPECT_EQ(zero.sequences.front().genus(), 0);
  EXPECT_EQ(asLists(bruteForceEnumerate(2).sequences), (std::vector<Gaps>{{1, 2}, {1, 3}}));
}

TEST(BruteForceTest, RefusesAboveLimit) {
  try {
    bruteForceEnumerate(15);
    FAIL() << "expected a resource error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
  EXPECT_THROW(bruteForceEnumerate(6, 5), Error);
  EXPECT_EQ(bruteForceEnumerate(5, 5).count, 12U);
}

TEST(TreeTest, Examples) {
  EXPECT_EQ(treeEnumerate(3).count, 4U);
  EXPECT_EQ(treeEnumerate(5).count, 12U);
  const auto one = treeEnumerate(1);
  EXPECT_EQ(asLists(one.sequences), (std::vector<Gaps>{{1}}));
  EXPECT_EQ(treeEnumerate(0).count, 1U);
}

TEST(TreeTest, SerialOrderIsLexicographic) {
  for (Genus g = 0; g <= 9; ++g) {
    const auto seqs = treeEnumerate(g).sequences;
    EXPECT_TRUE(std::is_sorted(seqs.begin(), seqs.end())) << "genus " << g;
  }
}

TEST(TreeTest, AgreesWithIndependentOracle) {
  for (Genus g = 0; g <= 10; ++g) {
    EXPECT_EQ(asLists(treeEnumerate(g).sequences), oracle::enumerate(g)) << "genus " << g;
  }
}

TEST(TreeTest, AgreesWithBruteForce) {
  for (Genus g = 0; g <= 12; ++g) {
    auto tree = treeEnumerate(g).sequences;
    auto brute = bruteForceEnumerate(g).sequences;
    std::sort(tree.begin(), tree.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(tree, brute) << "genus " << g;
  }
}

TEST(TreeTest, ParentIsUnique) {
  for (Genus g = 1; g <= 10; ++g) {
    std::set<Gaps> parents;
    for (const auto& l : asLists(treeEnumerate(g - 1).sequences)) parents.insert(l);
    for (const auto& seq : treeEnumerate(g).sequences) {
      Gaps parent(seq.gaps().begin(), seq.gaps().end() - 1);
      EXPECT_TRUE(std::holds_alternative<GapSequence>(validate(g - 1, parent)));
      EXPECT_TRUE(parents.count(parent));
    }
  }
}

TEST(TreeTest, ExactlyOneAllOddSequence) {
  for (Genus g = 2; g <= 12; ++g) {
    int allOdd = 0;
    for (const auto& seq : treeEnumerate(g).sequences) {
      const auto gaps = seq.gaps();
      if (std::all_of(gaps.begin(), gaps.end(), [](Order n) { return n % 2 == 1; })) {
        ++allOdd;
        EXPECT_EQ(firstNonGap(seq), 2);
      }
    }
    EXPECT_EQ(allOdd, 1) << "genus " << g;
  }
}

TEST(TreeTest, CountsNonDecreasing) {
  // Regression property observed for small genus.
  const auto rows = countByGenus(13);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].count, rows[i - 1].count);
  }
}

TEST(TreeTest, CountsDeterministicAcrossWorkers) {
  for (Genus g : {0, 1, 2, 7, 15, 18}) {
    const auto serial = treeCount(g, 1);
    for (unsigned w : {2U, 3U, 8U}) {
      EXPECT_EQ(treeCount(g, w), serial) << "genus " << g << " workers " << w;
      EXPECT_EQ(treeEnumerate(g, {w, false, {}}).count, serial);
    }
  }
}

TEST(TreeTest, ParallelCollectionMatchesSerial) {
  const auto serial = treeEnumerate(14).sequences;
  EnumerationOptions options;
  options.workers = 4;
  EXPECT_EQ(treeEnumerate(14, options).sequences, serial);
}

TEST(TreeTest, ParallelStreamingDeliversEverySequenceOnce) {
  std::multiset<Gaps> seen;
  EnumerationOptions options;
  options.workers = 4;
  options.collect = false;
  options.sink = [&](const GapSequence& s) { seen.emplace(s.gaps().begin(), s.gaps().end()); };
  const auto r = treeEnumerate(12, options);
  EXPECT_EQ(r.count, seen.size());
  EXPECT_TRUE(r.sequences.empty());
  const auto expected = asLists(bruteForceEnumerate(12).sequences);
  EXPECT_EQ(std::vector<Gaps>(seen.begin(), seen.end()), expected);
}

TEST(TreeTest, NegativeGenusRejected) {
  EXPECT_THROW(treeEnumerate(-1), Error);
  EXPECT_THROW(treeCount(-2), Error);
  EXPECT_THROW(countByGenus(-1), Error);
}

TEST(CountByGenusTest, Examples) {
  EXPECT_EQ(countByGenus(3),
            (std::vector<GenusCount>{{0, 1}, {1, 1}, {2, 2}, {3, 4}}));
  EXPECT_EQ(countByGenus(0), (std::vector<GenusCount>{{0, 1}}));
  EXPECT_EQ(countByGenus(5).back(), (GenusCount{5, 12}));
}

TEST(CountByGenusTest, MatchesBruteForceWithinOracleWindow) {
  const auto rows = countByGenus(14);
  for (const auto& row : rows) {
    EXPECT_EQ(row.count, bruteForceEnumerate(row.genus, 14, {1, false, {}}).count)
        << "genus " << row.genus;
  }
}

TEST(FilterTest, Examples) {
  auto first = filterEnumerate(3, FirstNonGapIs{2});
  EXPECT_EQ(asLists(first.sequences), (std::vector<Gaps>{{1, 3, 5}}));
  auto ordinary = filterEnumerate(3, WeightIs{0});
  EXPECT_EQ(asLists(ordinary.sequences), (std::vector<Gaps>{{1, 2, 3}}));
  auto exceptional = filterEnumerate(4, ClassificationIs{Classification::Exceptional});
  EXPECT_EQ(asLists(exceptional.sequences), (std::vector<Gaps>{{1, 2, 3, 5}}));
}

TEST(FilterTest, CountsMatchPostHocFiltering) {
  const std::vector<SequenceFilter> filters{
      FirstNonGapIs{3}, WeightIs{2}, ClassificationIs{Classification::GenericWeierstrass}};
  for (Genus g = 1; g <= 9; ++g) {
    const auto all = treeEnumerate(g).sequences;
    for (const auto& f : filters) {
      const auto expected = static_cast<std::uint64_t>(std::count_if(
          all.begin(), all.end(), [&](const GapSequence& s) { return matches(f, s); }));
      EXPECT_EQ(filterEnumerate(g, f).count, expected);
      EnumerationOptions parallel;
      parallel.workers = 3;
      EXPECT_EQ(filterEnumerate(g, f, parallel).count, expected);
    }
  }
}

TEST(FilterTest, ParseAndErrors) {
  EXPECT_EQ(std::get<FirstNonGapIs>(parseFilter("firstNonGap=2")).value, 2);
  EXPECT_EQ(std::get<WeightIs>(parseFilter("weight=0")).value, 0);
  EXPECT_EQ(std::get<ClassificationIs>(parseFilter("classification=hyperelliptic")).value,
            Classification::Hyperelliptic);
  EXPECT_THROW(parseFilter("colour=red"), Error);
  EXPECT_THROW(parseFilter("weight"), Error);
  EXPECT_THROW(parseFilter("weight=x"), Error);
  EXPECT_THROW(parseFilter("classification=elliptic"), Error);
  EXPECT_THROW(filterEnumerate(0, WeightIs{0}), Error);
}

}  // namespace
}  // namespace wgap
