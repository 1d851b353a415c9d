#include "wgap/count_cache.hpp"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace wgap {
namespace {

std::filesystem::path tempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("wgap_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CountCacheTest, SaveThenLoad) {
  const auto path = tempPath("roundtrip");
  saveCounts({{3, 4}}, path);
  EXPECT_EQ(slurp(path), "genus,count\n3,4\n");
  EXPECT_EQ(loadCounts(path), (std::vector<GenusCount>{{3, 4}}));
  std::filesystem::remove(path);
}

TEST(CountCacheTest, RoundTripsTableAndLargeCounts) {
  const std::vector<GenusCount> table{
      {0, 1}, {18, 13467}, {60, 18446744073709551615ULL}};
  EXPECT_EQ(parseCounts(formatCounts(table)), table);
}

TEST(CountCacheTest, HeaderOnlyIsEmpty) {
  EXPECT_TRUE(parseCounts("genus,count\n").empty());
}

TEST(CountCacheTest, CorruptRowNamesLine) {
  try {
    parseCounts("genus,count\n3,banana\n");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(CountCacheTest, OtherCorruptions) {
  EXPECT_THROW(parseCounts(""), Error);
  EXPECT_THROW(parseCounts("g,c\n"), Error);
  EXPECT_THROW(parseCounts("genus,count\n3,4"), Error);   // no trailing newline
  EXPECT_THROW(parseCounts("genus,count\n-1,4\n"), Error);
  EXPECT_THROW(parseCounts("genus,count\n3\n"), Error);
  EXPECT_THROW(parseCounts("genus,count\n3,4,5\n"), Error);
  EXPECT_THROW(parseCounts("genus,count\r\n3,4\r\n"), Error);
}

TEST(CountCacheTest, MissingFileIsIoError) {
  try {
    loadCounts("/nonexistent/dir/counts.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
  EXPECT_THROW(saveCounts({}, "/nonexistent/dir/counts.csv"), Error);
}

}  // namespace
}  // namespace wgap
