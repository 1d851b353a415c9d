#include "wgap/selftest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wgap/analysis.hpp"
#include "wgap/enumerator.hpp"
#include "wgap/ladder.hpp"

namespace wgap {

namespace {

std::string render(const GapSequence& seq) {
  std::ostringstream out;
  out << "g=" << seq.genus() << " {";
  bool first = true;
  for (Order n : seq.gaps()) {
    out << (first ? "" : ",") << n;
    first = false;
  }
  out << "}";
  return out.str();
}

// Runs `check` over every sequence of genus 0..maxGenus and records the
// first failure message it returns (empty string means the sequence passed).
template <class Check>
CheckResult overAllSequences(const std::string& name, Genus minGenus, Genus maxGenus,
                             Check check) {
  CheckResult result{name, true, {}};
  std::uint64_t seen = 0;
  for (Genus g = minGenus; g <= maxGenus && result.passed; ++g) {
    EnumerationOptions options;
    options.collect = false;
    options.sink = [&](const GapSequence& seq) {
      if (!result.passed) return;
      ++seen;
      if (auto why = check(seq); !why.empty()) {
        result.passed = false;
        result.detail = render(seq) + ": " + why;
      }
    };
    treeEnumerate(g, options);
  }
  if (result.passed) result.detail = std::to_string(seen) + " sequences";
  return result;
}

}  // namespace

std::vector<CheckResult> runSelftest(const SelftestOptions& options) {
  std::vector<CheckResult> results;
  const Genus maxGenus = options.maxGenus;

  {
    CheckResult r{"oracle equivalence", true, {}};
    const Genus top = std::min(maxGenus, options.bruteForceLimit);
    for (Genus g = 0; g <= top && r.passed; ++g) {
      auto tree = treeEnumerate(g).sequences;
      auto brute = bruteForceEnumerate(g, options.bruteForceLimit).sequences;
      std::sort(tree.begin(), tree.end());
      std::sort(brute.begin(), brute.end());
      if (tree != brute) {
        r.passed = false;
        r.detail = "genus " + std::to_string(g) + ": tree " +
                   std::to_string(tree.size()) + " vs brute force " +
                   std::to_string(brute.size());
      }
    }
    if (r.passed) r.detail = "genus 0.." + std::to_string(top);
    results.push_back(r);
  }

  results.push_back(overAllSequences(
      "structural invariants", 1, maxGenus, [](const GapSequence& seq) -> std::string {
        const Genus g = seq.genus();
        const auto gaps = seq.gaps();
        if (gaps.front() != 1) return "first gap is not 1";
        if (gaps.back() >= 2 * g) return "gap not below 2g";
        const auto ng = nonGaps(seq);
        if (static_cast<Genus>(ng.nonGaps().size()) != g) return "non-gap count differs from g";
        if (!ng.isMember(2 * g)) return "2g is not a non-gap";
        if (!isClosedUnderAddition(ng)) return "non-gaps not closed";
        const Order h = firstNonGap(seq);
        if (h < 2 || h > g + 1) return "first non-gap outside [2, g+1]";
        if ((h <= g) != (weight(seq) > 0)) return "first non-gap <= g disagrees with weight > 0";
        auto again = validate(g, gaps);
        if (!std::holds_alternative<GapSequence>(again) ||
            std::get<GapSequence>(again) != seq) {
          return "validate round trip failed";
        }
        return {};
      }));

  results.push_back(overAllSequences(
      "ladder laws", 0, maxGenus, [](const GapSequence& seq) -> std::string {
        const auto ladder = ladderFromGaps(seq);
        const auto report = verifyLadderLaws(ladder);
        for (const auto& law : report.laws) {
          if (!law.passed) return "law '" + law.law + "' failed";
        }
        if (gapsFromLadder(ladder) != seq) return "ladder round trip failed";
        const Genus g = seq.genus();
        if (g >= 1 && (ladder.h0[static_cast<std::size_t>(2 * g - 1)] != g ||
                       ladder.h0[static_cast<std::size_t>(2 * g)] != g + 1)) {
          return "h0 at 2g-1 / 2g differs from g / g+1";
        }
        return {};
      }));

  results.push_back(overAllSequences(
      "weight range", 1, maxGenus, [](const GapSequence& seq) -> std::string {
        const Genus g = seq.genus();
        const auto w = weight(seq);
        const auto cap = g * (g - 1) / 2;
        if (w < 0 || w > cap) return "weight outside [0, g(g-1)/2]";
        const bool hyper = g >= 2 && seq == hyperellipticSequence(g);
        if ((w == cap && g >= 2) != hyper) return "maximal weight not unique to hyperelliptic";
        return {};
      }));

  results.push_back(overAllSequences(
      "jenkins forced gaps", 1, maxGenus, [](const GapSequence& seq) -> std::string {
        const Genus g = seq.genus();
        const Order h = firstNonGap(seq);
        for (Order k = 2; k <= 2 * g - 1; ++k) {
          if (std::gcd(h, k) != 1) continue;
          if (jenkinsForcedGap(h, k, g) && !seq.isGap(k)) {
            return "k=" + std::to_string(k) + " forced but is a non-gap";
          }
        }
        return {};
      }));

  {
    CheckResult r{"closed-form identities", true, "genus 2..1000"};
    for (Genus g = 2; g <= 1000 && r.passed; ++g) {
      const auto bounds = pointCountBounds(g);
      bool ok = bounds.lower == 2 * g + 2 && bounds.upper == g * g * g - g &&
                bounds.totalWeight == bounds.upper &&
                impliedHyperellipticPointCount(g) == bounds.lower;
      if (g <= 50) {
        ok = ok && weight(hyperellipticSequence(g)) == g * (g - 1) / 2 &&
             weight(exceptionalSequence(g)) == 1;
      }
      if (!ok) {
        r.passed = false;
        r.detail = "genus " + std::to_string(g);
      }
    }
    results.push_back(r);
  }

  {
    CheckResult r{"parallel count agreement", true, {}};
    const unsigned workers = std::max(2U, options.workers);
    for (Genus g = 0; g <= maxGenus && r.passed; ++g) {
      const auto serial = treeCount(g, 1);
      if (treeCount(g, workers) != serial || treeEnumerate(g).count != serial) {
        r.passed = false;
        r.detail = "genus " + std::to_string(g);
      }
    }
    if (r.passed) r.detail = "1 vs " + std::to_string(workers) + " workers";
    results.push_back(r);
  }
  return results;
}

}  // namespace wgap
