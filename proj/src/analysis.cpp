#include "wgap/analysis.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace wgap {

namespace {

void requireFormulaGenus(Genus genus, Genus minimum) {
  if (genus < minimum || genus > kMaxFormulaGenus) {
    throw Error(ErrorCode::InvalidArgument,
                "genus must lie in [" + std::to_string(minimum) + ", " +
                    std::to_string(kMaxFormulaGenus) + "], got " +
                    std::to_string(genus));
  }
}

bool isHyperellipticShape(std::span<const Order> gaps) {
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (gaps[i] != static_cast<Order>(2 * i + 1)) return false;
  }
  return true;
}

bool isExceptionalShape(std::span<const Order> gaps) {
  const auto g = static_cast<Order>(gaps.size());
  for (Order i = 0; i + 1 < g; ++i) {
    if (gaps[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return gaps.back() == g + 1;
}

}  // namespace

const char* toString(Classification c) noexcept {
  switch (c) {
    case Classification::Rational: return "rational";
    case Classification::Ordinary: return "ordinary";
    case Classification::Hyperelliptic: return "hyperelliptic";
    case Classification::Exceptional: return "exceptional";
    case Classification::GenericWeierstrass: return "generic-weierstrass";
  }
  return "unknown";
}

std::optional<Classification> parseClassification(std::string_view label) {
  for (auto c : {Classification::Rational, Classification::Ordinary,
                 Classification::Hyperelliptic, Classification::Exceptional,
                 Classification::GenericWeierstrass}) {
    if (label == toString(c)) return c;
  }
  return std::nullopt;
}

std::int64_t weight(const GapSequence& seq) {
  std::int64_t total = 0;
  std::int64_t i = 1;
  for (Order n : seq.gaps()) total += n - i++;
  return total;
}

WeightReport classify(const GapSequence& seq) {
  WeightReport report;
  report.weight = weight(seq);
  report.isWeierstrass = report.weight > 0;
  const Genus g = seq.genus();
  if (g == 0) {
    report.classification = Classification::Rational;
    return report;
  }
  report.firstNonGap = firstNonGap(seq);
  const auto gaps = seq.gaps();
  report.exceptionalShape = g >= 2 && isExceptionalShape(gaps);
  if (report.weight == 0) {
    report.classification = Classification::Ordinary;
  } else if (g >= 2 && isHyperellipticShape(gaps)) {
    report.classification = Classification::Hyperelliptic;
  } else if (report.exceptionalShape) {
    report.classification = Classification::Exceptional;
  } else {
    report.classification = Classification::GenericWeierstrass;
  }
  return report;
}

GapSequence hyperellipticSequence(Genus genus) {
  requireFormulaGenus(genus, 2);
  std::vector<Order> gaps(static_cast<std::size_t>(genus));
  for (Genus i = 0; i < genus; ++i) gaps[static_cast<std::size_t>(i)] = 2 * i + 1;
  return detail::SequenceAccess::make(std::move(gaps));
}

GapSequence exceptionalSequence(Genus genus) {
  requireFormulaGenus(genus, 2);
  std::vector<Order> gaps(static_cast<std::size_t>(genus));
  std::iota(gaps.begin(), gaps.end(), Order{1});
  gaps.back() = genus + 1;
  return detail::SequenceAccess::make(std::move(gaps));
}

PointCountBounds pointCountBounds(Genus genus) {
  requireFormulaGenus(genus, 2);
  const std::int64_t cubic = (genus - 1) * genus * (genus + 1);
  return {genus, 2 * genus + 2, cubic, cubic};
}

std::int64_t impliedHyperellipticPointCount(Genus genus) {
  const auto bounds = pointCountBounds(genus);
  const std::int64_t perPoint = genus * (genus - 1) / 2;
  if (bounds.totalWeight % perPoint != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "total weight not divisible by hyperelliptic weight at genus " +
                    std::to_string(genus));
  }
  return bounds.totalWeight / perPoint;
}

bool jenkinsForcedGap(Order h, Order k, Genus genus) {
  if (h < 2 || k < 2) {
    throw Error(ErrorCode::InvalidArgument, "h and k must both be at least 2");
  }
  if (genus < 1) {
    throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  }
  if (std::gcd(h, k) != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "h and k must be coprime, gcd(" + std::to_string(h) + ", " +
                    std::to_string(k) + ") = " + std::to_string(std::gcd(h, k)));
  }
  const __int128 product = static_cast<__int128>(h - 1) * (k - 1);
  return static_cast<__int128>(2) * genus > product;
}

}  // namespace wgap
