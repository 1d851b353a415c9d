#ifndef WGAP_COUNT_CACHE_HPP
#define WGAP_COUNT_CACHE_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wgap/enumerator.hpp"

namespace wgap {

// CSV with header "genus,count", one "<genus>,<count>\n" row per entry,
// decimal integers, no trailing blank line.

std::string formatCounts(const std::vector<GenusCount>& table);

/// Throws Error(Parse) naming the 1-based offending line.
std::vector<GenusCount> parseCounts(std::string_view text);

/// Throws Error(Io) when the file cannot be written.
void saveCounts(const std::vector<GenusCount>& table, const std::filesystem::path& path);

/// Throws Error(Io) when unreadable and Error(Parse) when corrupt.
std::vector<GenusCount> loadCounts(const std::filesystem::path& path);

}  // namespace wgap

#endif  // WGAP_COUNT_CACHE_HPP
