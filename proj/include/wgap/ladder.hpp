#ifndef WGAP_LADDER_HPP
#define WGAP_LADDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgap/gapseq.hpp"

namespace wgap {

/// Dimensions along the single-point divisor family D_n, n = 0..2g.
///
/// `h0[n]` is the dimension of functions with at most an n-fold pole at the
/// point; `speciality[n]` is the dimension of holomorphic 1-forms vanishing
/// to order n there (the index of speciality). Beyond 2g both are fixed by
/// h0[n] = 1 - g + n and speciality[n] = 0, so the window stops at 2g.
///
/// The struct is a plain value so that hand-built (possibly broken) ladders
/// can be checked with verifyLadderLaws().
struct DimensionLadder {
  Genus genus = 0;
  std::vector<std::int64_t> h0;
  std::vector<std::int64_t> speciality;

  friend bool operator==(const DimensionLadder&, const DimensionLadder&) = default;
};

/// h0 climbs by one exactly at non-gaps; speciality follows from
/// h0[n] - speciality[n] = 1 - g + n.
DimensionLadder ladderFromGaps(const GapSequence& seq);

struct LawResult {
  std::string law;
  bool passed = true;
  std::optional<std::int64_t> firstOffendingIndex;
};

struct LadderReport {
  std::vector<LawResult> laws;
  bool allPassed() const;
  const LawResult* find(const std::string& law) const;
};

// Law names, in the order verifyLadderLaws() reports them.
inline constexpr const char* kLawWindow = "window shape";
inline constexpr const char* kLawRiemannRoch = "riemann-roch identity";
inline constexpr const char* kLawGenusAtZero = "speciality equals genus at degree 0";
inline constexpr const char* kLawVanishing = "speciality vanishes above 2g-2";
inline constexpr const char* kLawH0Steps = "h0 steps in {0,+1}";
inline constexpr const char* kLawSpecialitySteps = "speciality steps in {0,-1}";
inline constexpr const char* kLawDecreaseCount = "speciality drops exactly g times";
inline constexpr const char* kLawConstantsOnly = "h0 equals 1 at degree 0";

/// Checks every law and reports each with its first offending index.
/// Never throws; a ladder with the wrong window length fails the window law
/// and the index-based laws are evaluated over the overlap only.
LadderReport verifyLadderLaws(const DimensionLadder& ladder);

/// Gaps are the n in [1, 2g] where h0 does not climb. Throws
/// Error(InvalidLadder) naming the first failed law, or when the recovered
/// gaps do not form a semigroup complement.
GapSequence gapsFromLadder(const DimensionLadder& ladder);

}  // namespace wgap

#endif  // WGAP_LADDER_HPP
