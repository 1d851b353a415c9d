#ifndef WGAP_ENUMERATOR_HPP
#define WGAP_ENUMERATOR_HPP

#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wgap/analysis.hpp"
#include "wgap/gapseq.hpp"

namespace wgap {

inline constexpr Genus kDefaultBruteForceLimit = 14;

/// Receives each sequence as it is produced. With more than one worker the
/// sink is called from worker threads, one call at a time.
using SequenceSink = std::function<void(const GapSequence&)>;

struct EnumerationResult {
  Genus genus = 0;
  std::uint64_t count = 0;
  // Filled only when collection was requested.
  std::vector<GapSequence> sequences;
};

struct EnumerationOptions {
  unsigned workers = 1;
  bool collect = true;  // keep sequences in the result
  SequenceSink sink;    // optional streaming consumer
};

/// Oracle: tests every (g-1)-subset of {2,...,2g-1} with validate().
/// Single-threaded, emits in lexicographic order. Throws
/// Error(ResourceLimit) when genus exceeds `limit`.
EnumerationResult bruteForceEnumerate(Genus genus,
                                      Genus limit = kDefaultBruteForceLimit,
                                      const EnumerationOptions& options = {});

/// Depth-first walk of the semigroup tree: a child drops one minimal
/// generator above the parent's Frobenius number. Gap lists grow by
/// appending, so the serial walk with ascending generators emits in
/// lexicographic order. With workers > 1 subtrees are shared out and only
/// the set of sequences and the count are deterministic.
EnumerationResult treeEnumerate(Genus genus, const EnumerationOptions& options = {});

/// Count only; no sequence is materialised.
std::uint64_t treeCount(Genus genus, unsigned workers = 1);

struct GenusCount {
  Genus genus;
  std::uint64_t count;
  friend bool operator==(const GenusCount&, const GenusCount&) = default;
};

std::vector<GenusCount> countByGenus(Genus maxGenus, unsigned workers = 1);

struct FirstNonGapIs { Order value; };
struct WeightIs { std::int64_t value; };
struct ClassificationIs { Classification value; };
using SequenceFilter = std::variant<FirstNonGapIs, WeightIs, ClassificationIs>;

/// Parses "KEY=VALUE" with KEY one of firstNonGap, weight, classification.
/// Throws Error(Parse) for unknown keys or malformed values.
SequenceFilter parseFilter(std::string_view text);

bool matches(const SequenceFilter& filter, const GapSequence& seq);

/// Tree enumeration restricted to sequences satisfying `filter`.
/// Requires genus >= 1.
EnumerationResult filterEnumerate(Genus genus, const SequenceFilter& filter,
                                  const EnumerationOptions& options = {});

}  // namespace wgap

#endif  // WGAP_ENUMERATOR_HPP
