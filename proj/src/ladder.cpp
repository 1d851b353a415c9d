#include "wgap/ladder.hpp"

#include <algorithm>

namespace wgap {

namespace {

LawResult pass(const char* law) { return {law, true, std::nullopt}; }
LawResult fail(const char* law, std::int64_t index) { return {law, false, index}; }

}  // namespace

DimensionLadder ladderFromGaps(const GapSequence& seq) {
  const Genus g = seq.genus();
  const auto size = static_cast<std::size_t>(2 * g + 1);
  DimensionLadder ladder{g, std::vector<std::int64_t>(size),
                         std::vector<std::int64_t>(size)};
  ladder.h0[0] = 1;
  for (std::size_t n = 1; n < size; ++n) {
    ladder.h0[n] = ladder.h0[n - 1] + (seq.isGap(static_cast<Order>(n)) ? 0 : 1);
  }
  for (std::size_t n = 0; n < size; ++n) {
    ladder.speciality[n] = ladder.h0[n] - (1 - g + static_cast<std::int64_t>(n));
  }
  return ladder;
}

bool LadderReport::allPassed() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawResult& r) { return r.passed; });
}

const LawResult* LadderReport::find(const std::string& law) const {
  for (const auto& r : laws) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

LadderReport verifyLadderLaws(const DimensionLadder& ladder) {
  LadderReport report;
  const Genus g = ladder.genus;
  const auto& h0 = ladder.h0;
  const auto& sp = ladder.speciality;
  const auto expected = static_cast<std::int64_t>(2 * g + 1);

  if (g < 0) {
    report.laws.push_back(fail(kLawWindow, 0));
    return report;
  }
  const auto len = static_cast<std::int64_t>(std::min(h0.size(), sp.size()));
  if (static_cast<std::int64_t>(h0.size()) != expected ||
      static_cast<std::int64_t>(sp.size()) != expected) {
    report.laws.push_back(fail(kLawWindow, std::min(len, expected)));
  } else {
    report.laws.push_back(pass(kLawWindow));
  }
  auto at = [](const std::vector<std::int64_t>& v, std::int64_t n) {
    return v[static_cast<std::size_t>(n)];
  };

  {
    LawResult r = pass(kLawRiemannRoch);
    for (std::int64_t n = 0; n < len; ++n) {
      if (at(h0, n) - at(sp, n) != 1 - g + n) {
        r = fail(kLawRiemannRoch, n);
        break;
      }
    }
    report.laws.push_back(r);
  }

  if (len < 1 || at(sp, 0) != g) {
    report.laws.push_back(fail(kLawGenusAtZero, 0));
  } else {
    report.laws.push_back(pass(kLawGenusAtZero));
  }

  {
    LawResult r = pass(kLawVanishing);
    const std::int64_t from = std::max<std::int64_t>(0, 2 * g - 1);
    if (len <= from) {
      r = fail(kLawVanishing, from);
    } else {
      for (std::int64_t n = from; n < len; ++n) {
        if (at(sp, n) != 0) {
          r = fail(kLawVanishing, n);
          break;
        }
      }
    }
    report.laws.push_back(r);
  }

  {
    LawResult h = pass(kLawH0Steps);
    LawResult s = pass(kLawSpecialitySteps);
    for (std::int64_t n = 1; n < len; ++n) {
      const auto dh = at(h0, n) - at(h0, n - 1);
      const auto ds = at(sp, n) - at(sp, n - 1);
      if (h.passed && dh != 0 && dh != 1) h = fail(kLawH0Steps, n);
      if (s.passed && ds != 0 && ds != -1) s = fail(kLawSpecialitySteps, n);
    }
    report.laws.push_back(h);
    report.laws.push_back(s);
  }

  {
    // Count strict drops over [0, 2g-1]; each must be a single step, and
    // together they must take the speciality from g down to 0.
    LawResult r = pass(kLawDecreaseCount);
    const std::int64_t last = std::min(2 * g - 1, len - 1);
    std::int64_t drops = 0;
    for (std::int64_t n = 1; n <= last; ++n) {
      const auto ds = at(sp, n) - at(sp, n - 1);
      if (ds < 0) ++drops;
      if (ds < -1 || drops > g) {
        r = fail(kLawDecreaseCount, n);
        break;
      }
    }
    if (r.passed && (drops != g || len < 2 * g)) {
      r = fail(kLawDecreaseCount, std::max<std::int64_t>(last, 0));
    }
    report.laws.push_back(r);
  }

  if (len < 1 || at(h0, 0) != 1) {
    report.laws.push_back(fail(kLawConstantsOnly, 0));
  } else {
    report.laws.push_back(pass(kLawConstantsOnly));
  }
  return report;
}

GapSequence gapsFromLadder(const DimensionLadder& ladder) {
  const auto report = verifyLadderLaws(ladder);
  for (const auto& law : report.laws) {
    if (!law.passed) {
      throw Error(ErrorCode::InvalidLadder,
                  "ladder violates '" + law.law + "' at index " +
                      std::to_string(law.firstOffendingIndex.value_or(-1)));
    }
  }
  std::vector<Order> gaps;
  for (std::size_t n = 1; n < ladder.h0.size(); ++n) {
    if (ladder.h0[n] == ladder.h0[n - 1]) gaps.push_back(static_cast<Order>(n));
  }
  auto checked = validate(ladder.genus, gaps);
  if (auto* error = std::get_if<ValidationError>(&checked)) {
    throw Error(ErrorCode::InvalidLadder,
                "ladder gaps are not a semigroup complement: " + describe(*error));
  }
  return std::get<GapSequence>(std::move(checked));
}

}  // namespace wgap
