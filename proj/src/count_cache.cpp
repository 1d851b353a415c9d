#include "wgap/count_cache.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wgap {

namespace {

constexpr std::string_view kHeader = "genus,count";

template <class Int>
bool parseDecimal(std::string_view field, Int& out) {
  if (field.empty()) return false;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void corrupt(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::Parse,
              "count cache line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string formatCounts(const std::vector<GenusCount>& table) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& row : table) {
    out += std::to_string(row.genus);
    out += ',';
    out += std::to_string(row.count);
    out += '\n';
  }
  return out;
}

std::vector<GenusCount> parseCounts(std::string_view text) {
  std::vector<GenusCount> table;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  bool sawHeader = false;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) corrupt(lineNo + 1, "missing newline");
    const auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineNo;
    if (lineNo == 1) {
      if (line != kHeader) corrupt(1, "expected header 'genus,count'");
      sawHeader = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) corrupt(lineNo, "expected two fields");
    GenusCount row{};
    if (!parseDecimal(line.substr(0, comma), row.genus) || row.genus < 0) {
      corrupt(lineNo, "bad genus '" + std::string(line.substr(0, comma)) + "'");
    }
    if (!parseDecimal(line.substr(comma + 1), row.count)) {
      corrupt(lineNo, "bad count '" + std::string(line.substr(comma + 1)) + "'");
    }
    table.push_back(row);
  }
  if (!sawHeader) corrupt(1, "missing header");
  return table;
}

void saveCounts(const std::vector<GenusCount>& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out << formatCounts(table);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

std::vector<GenusCount> loadCounts(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseCounts(buffer.str());
}

}  // namespace wgap
