#ifndef WGAP_ANALYSIS_HPP
#define WGAP_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "wgap/gapseq.hpp"

namespace wgap {

// Formula operations use g^3, so genus is capped to keep it in 64 bits.
inline constexpr Genus kMaxFormulaGenus = Genus{1} << 20;

enum class Classification {
  Rational,
  Ordinary,
  Hyperelliptic,
  Exceptional,
  GenericWeierstrass,
};

const char* toString(Classification c) noexcept;
/// Inverse of toString; nullopt for unknown labels.
std::optional<Classification> parseClassification(std::string_view label);

struct WeightReport {
  std::int64_t weight = 0;
  bool isWeierstrass = false;
  Classification classification = Classification::Rational;
  std::optional<Order> firstNonGap;  // absent for genus 0
  // At genus 2 the sequence {1,3} is also of exceptional shape; it is
  // labelled hyperelliptic and this flag records the second reading.
  bool exceptionalShape = false;
};

struct PointCountBounds {
  Genus genus;
  std::int64_t lower;        // 2g + 2
  std::int64_t upper;        // g^3 - g
  std::int64_t totalWeight;  // g^3 - g
};

/// Sum over i of (n_i - i).
std::int64_t weight(const GapSequence& seq);

WeightReport classify(const GapSequence& seq);

/// {1, 3, ..., 2g-1}. Requires genus >= 2.
GapSequence hyperellipticSequence(Genus genus);

/// {1, ..., g-1, g+1}. Requires genus >= 2.
GapSequence exceptionalSequence(Genus genus);

PointCountBounds pointCountBounds(Genus genus);

/// Total weight g^3 - g divided by the hyperelliptic point weight g(g-1)/2.
std::int64_t impliedHyperellipticPointCount(Genus genus);

/// True iff 2g > (h-1)(k-1): with first non-gap h and gcd(h, k) = 1, k is
/// then forced to be a gap. Throws Error(InvalidArgument) if h < 2, k < 2,
/// gcd(h, k) != 1 or genus < 1.
bool jenkinsForcedGap(Order h, Order k, Genus genus);

}  // namespace wgap

#endif  // WGAP_ANALYSIS_HPP
