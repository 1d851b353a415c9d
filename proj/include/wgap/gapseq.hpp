#ifndef WGAP_GAPSEQ_HPP
#define WGAP_GAPSEQ_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wgap {

using Genus = std::int64_t;
using Order = std::int64_t;  // pole order / position in the semigroup

enum class ErrorCode {
  InvalidArgument,  // precondition violation
  ResourceLimit,    // request above a configured limit
  InvalidLadder,    // dimension ladder breaks one of its laws
  Io,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {
struct SequenceAccess;
}

/// Gap set of a numerical semigroup of genus g, stored ascending.
///
/// Instances are only produced by validate() or by library routines that
/// construct already-valid sets, so holding one means every structural and
/// closure invariant is satisfied.
class GapSequence {
 public:
  Genus genus() const noexcept { return static_cast<Genus>(gaps_.size()); }
  std::span<const Order> gaps() const noexcept { return gaps_; }
  bool isGap(Order n) const noexcept;

  friend bool operator==(const GapSequence&, const GapSequence&) = default;
  friend auto operator<=>(const GapSequence& a, const GapSequence& b) {
    return a.gaps_ <=> b.gaps_;
  }

 private:
  friend struct detail::SequenceAccess;
  explicit GapSequence(std::vector<Order> gaps) : gaps_(std::move(gaps)) {}

  std::vector<Order> gaps_;
};

/// Non-gaps in {2,...,2g} together with a membership bitmap over [0, 2g].
///
/// Unlike GapSequence this type may hold arbitrary (possibly non-closed)
/// sets so closure can be tested on hypothetical constructions.
class NonGapSet {
 public:
  /// Builds from an explicit ascending list of values in [2, 2g].
  /// Throws Error(InvalidArgument) on out-of-range or unsorted input.
  static NonGapSet fromNonGaps(Genus genus, std::span<const Order> nonGaps);

  Genus genus() const noexcept { return genus_; }
  std::span<const Order> nonGaps() const noexcept { return nonGaps_; }
  /// True for 0 and every stored non-gap; false outside [0, 2g].
  bool isMember(Order n) const noexcept;
  const std::vector<bool>& membership() const noexcept { return membership_; }

  friend bool operator==(const NonGapSet&, const NonGapSet&) = default;

 private:
  NonGapSet(Genus genus, std::vector<Order> nonGaps);

  Genus genus_ = 0;
  std::vector<Order> nonGaps_;
  std::vector<bool> membership_;
};

struct Witness {
  Order gap;
  Order summandA;
  Order summandB;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Order matches the order in which validate() checks them.
enum class ValidationErrorKind {
  WrongLength,
  MissingOne,
  GapOutOfRange,
  NotSorted,
  ClosureViolation,
};

struct ValidationError {
  ValidationErrorKind kind;
  std::optional<Witness> witness;  // set iff kind == ClosureViolation
  friend bool operator==(const ValidationError&, const ValidationError&) = default;
};

const char* toString(ValidationErrorKind kind) noexcept;
std::string describe(const ValidationError& error);

using ValidationResult = std::variant<GapSequence, ValidationError>;

/// Checks length, leading 1, range [1, 2g-1], strict ordering and finally
/// that no gap is a sum (with repetition) of non-gaps. The first failing
/// check is reported. A closure failure carries the smallest offending gap
/// written as a sum of two non-gaps.
ValidationResult validate(Genus genus, std::span<const Order> candidateGaps);

/// Sorts a candidate gap list ascending. Duplicates are kept so validate()
/// still reports them.
std::vector<Order> canonicalize(std::vector<Order> candidateGaps);

NonGapSet nonGaps(const GapSequence& seq);

/// For all members s, t with s + t <= 2g - 1, s + t is a member.
bool isClosedUnderAddition(const NonGapSet& set);

/// Smallest non-gap; in [2, g+1]. Throws Error(InvalidArgument) for genus 0.
Order firstNonGap(const GapSequence& seq);

namespace detail {

// Construction of sequences known to be valid; used by generators inside
// the library. Not part of the public contract.
struct SequenceAccess {
  static GapSequence make(std::vector<Order> gaps) {
    return GapSequence(std::move(gaps));
  }
};

}  // namespace detail

}  // namespace wgap

#endif  // WGAP_GAPSEQ_HPP
