#ifndef WGAP_TESTS_ORACLE_HPP
#define WGAP_TESTS_ORACLE_HPP

// Test-only reference implementations. They deliberately share nothing with
// the library: sums use an unbounded-knapsack reachability table over the
// non-gaps (true multiset sums, not the binary closure shortcut), and the
// enumeration walks every bitmask of {2, ..., 2g-1}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Gaps = std::vector<std::int64_t>;

// reachable[n] == true iff n is a sum of a non-empty multiset of non-gaps.
inline std::vector<bool> multisetSums(std::int64_t genus, const Gaps& gaps) {
  const std::int64_t top = 2 * genus;
  std::set<std::int64_t> gapSet(gaps.begin(), gaps.end());
  std::vector<std::int64_t> nonGaps;
  for (std::int64_t n = 1; n <= top; ++n) {
    if (!gapSet.count(n)) nonGaps.push_back(n);
  }
  std::vector<bool> reachable(static_cast<std::size_t>(top + 1), false);
  for (std::int64_t n = 1; n <= top; ++n) {
    for (std::int64_t m : nonGaps) {
      if (m > n) break;
      if (m == n || reachable[static_cast<std::size_t>(n - m)]) {
        reachable[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return reachable;
}

// Full definition: g strictly increasing gaps, first 1, all below 2g, and
// none of them a multiset sum of non-gaps.
inline bool isGapSequence(std::int64_t genus, const Gaps& gaps) {
  if (static_cast<std::int64_t>(gaps.size()) != genus) return false;
  if (genus == 0) return true;
  if (gaps.front() != 1) return false;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] < 1 || gaps[i] > 2 * genus - 1) return false;
    if (i > 0 && gaps[i] <= gaps[i - 1]) return false;
  }
  const auto reachable = multisetSums(genus, gaps);
  return std::none_of(gaps.begin(), gaps.end(), [&](std::int64_t n) {
    return reachable[static_cast<std::size_t>(n)];
  });
}

// Every gap sequence of a genus, sorted lexicographically.
inline std::vector<Gaps> enumerate(std::int64_t genus) {
  std::vector<Gaps> out;
  if (genus == 0) {
    out.push_back({});
    return out;
  }
  const int width = static_cast<int>(2 * genus - 2);  // bits for 2..2g-1
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
    if (std::popcount(mask) != genus - 1) continue;
    Gaps gaps{1};
    for (int b = 0; b < width; ++b) {
      if ((mask >> b) & 1U) gaps.push_back(b + 2);
    }
    if (isGapSequence(genus, gaps)) out.push_back(gaps);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

#endif  // WGAP_TESTS_ORACLE_HPP
