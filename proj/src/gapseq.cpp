#include "wgap/gapseq.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace wgap {

namespace {

void requireGenus(Genus genus) {
  if (genus < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "genus must be non-negative, got " + std::to_string(genus));
  }
}

// Smallest gap that is a sum of two non-gaps, as a witness triple.
// `member` covers [0, 2g]; gaps are ascending and inside [1, 2g-1].
std::optional<Witness> findClosureViolation(std::span<const Order> gaps,
                                            const std::vector<bool>& member) {
  const auto genus = static_cast<Genus>(gaps.size());
  if (2 * genus < 64) {
    // Word-level check: bit n of (members << a) is set iff n - a is a member.
    std::uint64_t members = 0;
    std::uint64_t gapBits = 0;
    for (Order n = 0; n <= 2 * genus; ++n) {
      if (member[static_cast<std::size_t>(n)]) members |= std::uint64_t{1} << n;
    }
    for (Order n : gaps) gapBits |= std::uint64_t{1} << n;
    std::uint64_t hits = 0;
    for (Order a = 2; a < 2 * genus; ++a) {
      if ((members >> a) & 1U) hits |= (members << a) & gapBits;
    }
    if (hits == 0) return std::nullopt;
    const Order n = std::countr_zero(hits);
    for (Order a = 1; a <= n / 2; ++a) {
      if (member[static_cast<std::size_t>(a)] &&
          member[static_cast<std::size_t>(n - a)]) {
        return Witness{n, a, n - a};
      }
    }
    return std::nullopt;  // unreachable: hits implies a decomposition
  }
  for (Order n : gaps) {
    for (Order a = 1; a <= n / 2; ++a) {
      if (member[static_cast<std::size_t>(a)] &&
          member[static_cast<std::size_t>(n - a)]) {
        return Witness{n, a, n - a};
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> membershipFromGaps(Genus genus, std::span<const Order> gaps) {
  std::vector<bool> member(static_cast<std::size_t>(2 * genus + 1), true);
  for (Order n : gaps) member[static_cast<std::size_t>(n)] = false;
  return member;
}

}  // namespace

bool GapSequence::isGap(Order n) const noexcept {
  return std::binary_search(gaps_.begin(), gaps_.end(), n);
}

NonGapSet::NonGapSet(Genus genus, std::vector<Order> nonGaps)
    : genus_(genus),
      nonGaps_(std::move(nonGaps)),
      membership_(static_cast<std::size_t>(2 * genus + 1), false) {
  membership_[0] = true;
  for (Order n : nonGaps_) membership_[static_cast<std::size_t>(n)] = true;
}

NonGapSet NonGapSet::fromNonGaps(Genus genus, std::span<const Order> nonGaps) {
  requireGenus(genus);
  Order previous = 1;
  for (Order n : nonGaps) {
    if (n < 2 || n > 2 * genus) {
      throw Error(ErrorCode::InvalidArgument,
                  "non-gap " + std::to_string(n) + " outside [2, " +
                      std::to_string(2 * genus) + "]");
    }
    if (n <= previous) {
      throw Error(ErrorCode::InvalidArgument,
                  "non-gaps must be strictly increasing");
    }
    previous = n;
  }
  return NonGapSet(genus, {nonGaps.begin(), nonGaps.end()});
}

bool NonGapSet::isMember(Order n) const noexcept {
  if (n < 0 || n > 2 * genus_) return false;
  return membership_[static_cast<std::size_t>(n)];
}

const char* toString(ValidationErrorKind kind) noexcept {
  switch (kind) {
    case ValidationErrorKind::WrongLength: return "WrongLength";
    case ValidationErrorKind::MissingOne: return "MissingOne";
    case ValidationErrorKind::GapOutOfRange: return "GapOutOfRange";
    case ValidationErrorKind::NotSorted: return "NotSorted";
    case ValidationErrorKind::ClosureViolation: return "ClosureViolation";
  }
  return "Unknown";
}

std::string describe(const ValidationError& error) {
  std::ostringstream out;
  out << toString(error.kind);
  if (error.witness) {
    out << " witness (" << error.witness->gap << "," << error.witness->summandA
        << "," << error.witness->summandB << ")";
  }
  return out.str();
}

ValidationResult validate(Genus genus, std::span<const Order> candidateGaps) {
  requireGenus(genus);
  if (static_cast<Genus>(candidateGaps.size()) != genus) {
    return ValidationError{ValidationErrorKind::WrongLength, std::nullopt};
  }
  if (genus == 0) return detail::SequenceAccess::make({});
  if (candidateGaps.front() != 1) {
    return ValidationError{ValidationErrorKind::MissingOne, std::nullopt};
  }
  for (Order n : candidateGaps) {
    if (n < 1 || n > 2 * genus - 1) {
      return ValidationError{ValidationErrorKind::GapOutOfRange, std::nullopt};
    }
  }
  if (std::adjacent_find(candidateGaps.begin(), candidateGaps.end(),
                         std::greater_equal<>()) != candidateGaps.end()) {
    return ValidationError{ValidationErrorKind::NotSorted, std::nullopt};
  }
  const auto member = membershipFromGaps(genus, candidateGaps);
  if (auto witness = findClosureViolation(candidateGaps, member)) {
    return ValidationError{ValidationErrorKind::ClosureViolation, witness};
  }
  return detail::SequenceAccess::make({candidateGaps.begin(), candidateGaps.end()});
}

std::vector<Order> canonicalize(std::vector<Order> candidateGaps) {
  std::sort(candidateGaps.begin(), candidateGaps.end());
  return candidateGaps;
}

NonGapSet nonGaps(const GapSequence& seq) {
  const Genus g = seq.genus();
  std::vector<Order> result;
  result.reserve(static_cast<std::size_t>(g));
  for (Order n = 2; n <= 2 * g; ++n) {
    if (!seq.isGap(n)) result.push_back(n);
  }
  return NonGapSet::fromNonGaps(g, result);
}

bool isClosedUnderAddition(const NonGapSet& set) {
  const auto values = set.nonGaps();
  const Order limit = 2 * set.genus() - 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i; j < values.size(); ++j) {
      const Order sum = values[i] + values[j];
      if (sum > limit) break;
      if (!set.isMember(sum)) return false;
    }
  }
  return true;
}

Order firstNonGap(const GapSequence& seq) {
  if (seq.genus() == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "first non-gap is undefined for genus 0");
  }
  Order n = 1;
  for (Order gap : seq.gaps()) {
    if (gap != n) break;
    ++n;
  }
  return n;
}

}  // namespace wgap
