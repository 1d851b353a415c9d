#include "wgap/wgap.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "wgap/analysis.hpp"
#include "wgap/count_cache.hpp"
#include "wgap/enumerator.hpp"
#include "wgap/ladder.hpp"
#include "wgap/selftest.hpp"

struct wgap_sequence {
  wgap::GapSequence value;
};

struct wgap_ladder {
  wgap::DimensionLadder value;
};

struct wgap_count_table {
  std::vector<wgap::GenusCount> rows;
};

namespace {

thread_local std::string lastError;

wgap_status fail(wgap_status status, std::string message) {
  lastError = std::move(message);
  return status;
}

wgap_status statusFor(wgap::ErrorCode code) {
  switch (code) {
    case wgap::ErrorCode::InvalidArgument: return WGAP_INVALID_ARGUMENT;
    case wgap::ErrorCode::ResourceLimit: return WGAP_RESOURCE_LIMIT;
    case wgap::ErrorCode::InvalidLadder: return WGAP_INVALID_LADDER;
    case wgap::ErrorCode::Io: return WGAP_IO_ERROR;
    case wgap::ErrorCode::Parse: return WGAP_PARSE_ERROR;
  }
  return WGAP_INTERNAL_ERROR;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
wgap_status guarded(Body&& body) noexcept {
  try {
    return body();
  } catch (const wgap::Error& e) {
    return fail(statusFor(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WGAP_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(WGAP_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(WGAP_INTERNAL_ERROR, "unknown exception");
  }
}

wgap_status nullArgument(const char* name) {
  return fail(WGAP_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

size_t copyOut(std::span<const std::int64_t> values, int64_t* buffer, size_t capacity) {
  if (buffer) {
    std::copy_n(values.begin(), std::min(capacity, values.size()), buffer);
  }
  return values.size();
}

wgap::SequenceSink sinkFor(wgap_sequence_callback callback, void* user) {
  if (!callback) return {};
  return [callback, user](const wgap::GapSequence& seq) {
    wgap_sequence handle{seq};
    callback(user, &handle);
  };
}

wgap::Genus toGenus(int64_t genus) { return static_cast<wgap::Genus>(genus); }

}  // namespace

extern "C" {

WGAP_API const char* wgap_last_error(void) { return lastError.c_str(); }

WGAP_API const char* wgap_status_name(wgap_status status) {
  switch (status) {
    case WGAP_OK: return "ok";
    case WGAP_INVALID_SEQUENCE: return "invalid sequence";
    case WGAP_INVALID_ARGUMENT: return "invalid argument";
    case WGAP_RESOURCE_LIMIT: return "resource limit";
    case WGAP_INVALID_LADDER: return "invalid ladder";
    case WGAP_IO_ERROR: return "i/o error";
    case WGAP_PARSE_ERROR: return "parse error";
    case WGAP_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

WGAP_API const char* wgap_validation_kind_name(wgap_validation_kind kind) {
  return wgap::toString(static_cast<wgap::ValidationErrorKind>(kind));
}

WGAP_API const char* wgap_classification_name(wgap_classification c) {
  return wgap::toString(static_cast<wgap::Classification>(c));
}

WGAP_API wgap_status wgap_validate(int64_t genus, const int64_t* gaps, size_t count,
                                   wgap_sequence** out, wgap_validation_error* error) {
  if (!out) return nullArgument("out");
  if (!gaps && count > 0) return nullArgument("gaps");
  return guarded([&] {
    *out = nullptr;
    auto result = wgap::validate(toGenus(genus), std::span<const int64_t>(gaps, count));
    if (auto* invalid = std::get_if<wgap::ValidationError>(&result)) {
      if (error) {
        *error = {static_cast<wgap_validation_kind>(invalid->kind),
                  invalid->witness.has_value() ? 1 : 0, 0, 0, 0};
        if (invalid->witness) {
          error->gap = invalid->witness->gap;
          error->summand_a = invalid->witness->summandA;
          error->summand_b = invalid->witness->summandB;
        }
      }
      return fail(WGAP_INVALID_SEQUENCE, wgap::describe(*invalid));
    }
    *out = new wgap_sequence{std::get<wgap::GapSequence>(std::move(result))};
    return WGAP_OK;
  });
}

WGAP_API wgap_sequence* wgap_sequence_clone(const wgap_sequence* seq) {
  if (!seq) return nullptr;
  return new (std::nothrow) wgap_sequence{seq->value};
}

WGAP_API void wgap_sequence_free(wgap_sequence* seq) { delete seq; }

WGAP_API int64_t wgap_sequence_genus(const wgap_sequence* seq) {
  return seq ? seq->value.genus() : -1;
}

WGAP_API size_t wgap_sequence_gaps(const wgap_sequence* seq, int64_t* buffer,
                                   size_t capacity) {
  return seq ? copyOut(seq->value.gaps(), buffer, capacity) : 0;
}

WGAP_API size_t wgap_sequence_non_gaps(const wgap_sequence* seq, int64_t* buffer,
                                       size_t capacity) {
  if (!seq) return 0;
  const auto set = wgap::nonGaps(seq->value);
  return copyOut(set.nonGaps(), buffer, capacity);
}

WGAP_API wgap_status wgap_non_gaps_closed(int64_t genus, const int64_t* non_gaps,
                                          size_t count, int* closed) {
  if (!closed) return nullArgument("closed");
  if (!non_gaps && count > 0) return nullArgument("non_gaps");
  return guarded([&] {
    const auto set = wgap::NonGapSet::fromNonGaps(
        toGenus(genus), std::span<const int64_t>(non_gaps, count));
    *closed = wgap::isClosedUnderAddition(set) ? 1 : 0;
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_first_non_gap(const wgap_sequence* seq, int64_t* out) {
  if (!seq) return nullArgument("seq");
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = wgap::firstNonGap(seq->value);
    return WGAP_OK;
  });
}

WGAP_API int64_t wgap_weight(const wgap_sequence* seq) {
  return seq ? wgap::weight(seq->value) : -1;
}

WGAP_API wgap_status wgap_classify(const wgap_sequence* seq, wgap_weight_report* out) {
  if (!seq) return nullArgument("seq");
  if (!out) return nullArgument("out");
  return guarded([&] {
    const auto report = wgap::classify(seq->value);
    out->weight = report.weight;
    out->is_weierstrass = report.isWeierstrass ? 1 : 0;
    out->classification = static_cast<wgap_classification>(report.classification);
    out->has_first_non_gap = report.firstNonGap.has_value() ? 1 : 0;
    out->first_non_gap = report.firstNonGap.value_or(0);
    out->exceptional_shape = report.exceptionalShape ? 1 : 0;
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_hyperelliptic_sequence(int64_t genus, wgap_sequence** out) {
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = new wgap_sequence{wgap::hyperellipticSequence(toGenus(genus))};
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_exceptional_sequence(int64_t genus, wgap_sequence** out) {
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = new wgap_sequence{wgap::exceptionalSequence(toGenus(genus))};
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_point_count_bounds_for(int64_t genus,
                                                 wgap_point_count_bounds* out) {
  if (!out) return nullArgument("out");
  return guarded([&] {
    const auto b = wgap::pointCountBounds(toGenus(genus));
    *out = {b.genus, b.lower, b.upper, b.totalWeight};
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_implied_hyperelliptic_point_count(int64_t genus, int64_t* out) {
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = wgap::impliedHyperellipticPointCount(toGenus(genus));
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_jenkins_forced_gap(int64_t h, int64_t k, int64_t genus,
                                             int* forced) {
  if (!forced) return nullArgument("forced");
  return guarded([&] {
    *forced = wgap::jenkinsForcedGap(h, k, toGenus(genus)) ? 1 : 0;
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_ladder_from_gaps(const wgap_sequence* seq, wgap_ladder** out) {
  if (!seq) return nullArgument("seq");
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = new wgap_ladder{wgap::ladderFromGaps(seq->value)};
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_ladder_create(int64_t genus, const int64_t* h0,
                                        const int64_t* speciality, size_t length,
                                        wgap_ladder** out) {
  if (!out) return nullArgument("out");
  if (length > 0 && (!h0 || !speciality)) return nullArgument("h0/speciality");
  return guarded([&] {
    wgap::DimensionLadder ladder;
    ladder.genus = toGenus(genus);
    ladder.h0.assign(h0, h0 + length);
    ladder.speciality.assign(speciality, speciality + length);
    *out = new wgap_ladder{std::move(ladder)};
    return WGAP_OK;
  });
}

WGAP_API void wgap_ladder_free(wgap_ladder* ladder) { delete ladder; }

WGAP_API int64_t wgap_ladder_genus(const wgap_ladder* ladder) {
  return ladder ? ladder->value.genus : -1;
}

WGAP_API size_t wgap_ladder_h0(const wgap_ladder* ladder, int64_t* buffer,
                               size_t capacity) {
  return ladder ? copyOut(ladder->value.h0, buffer, capacity) : 0;
}

WGAP_API size_t wgap_ladder_speciality(const wgap_ladder* ladder, int64_t* buffer,
                                       size_t capacity) {
  return ladder ? copyOut(ladder->value.speciality, buffer, capacity) : 0;
}

WGAP_API wgap_status wgap_gaps_from_ladder(const wgap_ladder* ladder, wgap_sequence** out) {
  if (!ladder) return nullArgument("ladder");
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = new wgap_sequence{wgap::gapsFromLadder(ladder->value)};
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_verify_ladder_laws(const wgap_ladder* ladder,
                                             wgap_law_callback callback, void* user,
                                             int* all_passed) {
  if (!ladder) return nullArgument("ladder");
  return guarded([&] {
    const auto report = wgap::verifyLadderLaws(ladder->value);
    if (callback) {
      for (const auto& law : report.laws) {
        callback(user, law.law.c_str(), law.passed ? 1 : 0,
                 law.firstOffendingIndex.value_or(-1));
      }
    }
    if (all_passed) *all_passed = report.allPassed() ? 1 : 0;
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_tree_enumerate(int64_t genus, unsigned workers,
                                         wgap_sequence_callback callback, void* user,
                                         uint64_t* count) {
  return guarded([&] {
    wgap::EnumerationOptions options;
    options.workers = workers;
    options.collect = false;
    options.sink = sinkFor(callback, user);
    const auto result = wgap::treeEnumerate(toGenus(genus), options);
    if (count) *count = result.count;
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_tree_count(int64_t genus, unsigned workers, uint64_t* count) {
  if (!count) return nullArgument("count");
  return guarded([&] {
    *count = wgap::treeCount(toGenus(genus), workers);
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_brute_force_enumerate(int64_t genus, int64_t limit,
                                                wgap_sequence_callback callback,
                                                void* user, uint64_t* count) {
  return guarded([&] {
    wgap::EnumerationOptions options;
    options.collect = false;
    options.sink = sinkFor(callback, user);
    const auto result = wgap::bruteForceEnumerate(toGenus(genus), toGenus(limit), options);
    if (count) *count = result.count;
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_filter_enumerate(int64_t genus, const char* filter,
                                           unsigned workers,
                                           wgap_sequence_callback callback, void* user,
                                           uint64_t* count) {
  if (!filter) return nullArgument("filter");
  return guarded([&] {
    const auto parsed = wgap::parseFilter(filter);
    wgap::EnumerationOptions options;
    options.workers = workers;
    options.collect = false;
    options.sink = sinkFor(callback, user);
    const auto result = wgap::filterEnumerate(toGenus(genus), parsed, options);
    if (count) *count = result.count;
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_count_by_genus(int64_t max_genus, unsigned workers,
                                         uint64_t* counts) {
  if (!counts) return nullArgument("counts");
  return guarded([&] {
    const auto rows = wgap::countByGenus(toGenus(max_genus), workers);
    for (std::size_t i = 0; i < rows.size(); ++i) counts[i] = rows[i].count;
    return WGAP_OK;
  });
}

WGAP_API wgap_count_table* wgap_count_table_new(void) {
  return new (std::nothrow) wgap_count_table{};
}

WGAP_API void wgap_count_table_free(wgap_count_table* table) { delete table; }

WGAP_API wgap_status wgap_count_table_add(wgap_count_table* table, int64_t genus,
                                          uint64_t count) {
  if (!table) return nullArgument("table");
  if (genus < 0) return fail(WGAP_INVALID_ARGUMENT, "genus must be non-negative");
  return guarded([&] {
    auto it = std::find_if(table->rows.begin(), table->rows.end(),
                           [&](const wgap::GenusCount& r) { return r.genus == genus; });
    if (it != table->rows.end()) {
      it->count = count;
    } else {
      table->rows.push_back({genus, count});
    }
    return WGAP_OK;
  });
}

WGAP_API size_t wgap_count_table_size(const wgap_count_table* table) {
  return table ? table->rows.size() : 0;
}

WGAP_API wgap_status wgap_count_table_row(const wgap_count_table* table, size_t index,
                                          int64_t* genus, uint64_t* count) {
  if (!table) return nullArgument("table");
  if (index >= table->rows.size()) {
    return fail(WGAP_INVALID_ARGUMENT, "row index out of range");
  }
  if (genus) *genus = table->rows[index].genus;
  if (count) *count = table->rows[index].count;
  return WGAP_OK;
}

WGAP_API int wgap_count_table_lookup(const wgap_count_table* table, int64_t genus,
                                     uint64_t* count) {
  if (!table) return 0;
  for (const auto& row : table->rows) {
    if (row.genus == genus) {
      if (count) *count = row.count;
      return 1;
    }
  }
  return 0;
}

WGAP_API wgap_status wgap_count_table_save(const wgap_count_table* table,
                                           const char* path) {
  if (!table) return nullArgument("table");
  if (!path) return nullArgument("path");
  return guarded([&] {
    wgap::saveCounts(table->rows, path);
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_count_table_load(const char* path, wgap_count_table** out) {
  if (!path) return nullArgument("path");
  if (!out) return nullArgument("out");
  return guarded([&] {
    *out = new wgap_count_table{wgap::loadCounts(path)};
    return WGAP_OK;
  });
}

WGAP_API wgap_status wgap_selftest(int64_t max_genus, int64_t brute_force_limit,
                                   unsigned workers, wgap_check_callback callback,
                                   void* user, int* all_passed) {
  return guarded([&] {
    if (max_genus < 0 || brute_force_limit < 0) {
      return fail(WGAP_INVALID_ARGUMENT, "genus limits must be non-negative");
    }
    wgap::SelftestOptions options;
    options.maxGenus = toGenus(max_genus);
    options.bruteForceLimit = toGenus(brute_force_limit);
    options.workers = workers;
    bool ok = true;
    for (const auto& check : wgap::runSelftest(options)) {
      ok = ok && check.passed;
      if (callback) callback(user, check.name.c_str(), check.passed ? 1 : 0,
                             check.detail.c_str());
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    return WGAP_OK;
  });
}

}  // extern "C"
