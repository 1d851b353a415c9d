#ifndef WGAP_SELFTEST_HPP
#define WGAP_SELFTEST_HPP

#include <string>
#include <vector>

#include "wgap/gapseq.hpp"

namespace wgap {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first failure, or a short summary on success
};

struct SelftestOptions {
  Genus maxGenus = 10;
  Genus bruteForceLimit = 14;
  unsigned workers = 1;
};

/// Field-runnable consistency suite: oracle equivalence (up to the smaller
/// of maxGenus and bruteForceLimit), per-sequence structural, ladder,
/// weight and Jenkins checks up to maxGenus, closed-form identities, and
/// count agreement between serial and parallel walks.
std::vector<CheckResult> runSelftest(const SelftestOptions& options);

}  // namespace wgap

#endif  // WGAP_SELFTEST_HPP
