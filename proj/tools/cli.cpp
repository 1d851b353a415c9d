#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgap/wgap.h"

namespace wgap::cli {

namespace {

struct SequenceDeleter {
  void operator()(wgap_sequence* s) const { wgap_sequence_free(s); }
};
struct LadderDeleter {
  void operator()(wgap_ladder* l) const { wgap_ladder_free(l); }
};
struct TableDeleter {
  void operator()(wgap_count_table* t) const { wgap_count_table_free(t); }
};
using SequencePtr = std::unique_ptr<wgap_sequence, SequenceDeleter>;
using LadderPtr = std::unique_ptr<wgap_ladder, LadderDeleter>;
using TablePtr = std::unique_ptr<wgap_count_table, TableDeleter>;

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parseIntegerList(const std::string& text) {
  std::vector<std::int64_t> values;
  if (text.empty()) return values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = std::string_view(text).substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t v = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw InputError("cannot parse '" + std::string(token) + "' as an integer");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::vector<std::int64_t> gapsOf(const wgap_sequence* seq) {
  std::vector<std::int64_t> v(wgap_sequence_gaps(seq, nullptr, 0));
  wgap_sequence_gaps(seq, v.data(), v.size());
  return v;
}

std::vector<std::int64_t> nonGapsOf(const wgap_sequence* seq) {
  std::vector<std::int64_t> v(wgap_sequence_non_gaps(seq, nullptr, 0));
  wgap_sequence_non_gaps(seq, v.data(), v.size());
  return v;
}

std::string join(const std::vector<std::int64_t>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

int exitFor(wgap_status status) {
  if (status == WGAP_OK) return kExitOk;
  return status == WGAP_INVALID_SEQUENCE ? kExitInvalid : kExitBadInput;
}

int reportFailure(std::ostream& err, wgap_status status) {
  err << "error: " << wgap_status_name(status) << ": " << wgap_last_error() << '\n';
  return exitFor(status);
}

// Writes SequenceRecords: genus, gaps, nonGaps, weight, classification,
// firstNonGap, in that order for every format.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void write(const wgap_sequence* seq) {
    wgap_weight_report report{};
    wgap_classify(seq, &report);
    const auto genus = wgap_sequence_genus(seq);
    const auto gaps = gapsOf(seq);
    const auto nonGaps = nonGapsOf(seq);
    const char* label = wgap_classification_name(report.classification);
    switch (format_) {
      case OutputFormat::Jsonl: {
        nlohmann::ordered_json record;
        record["genus"] = genus;
        record["gaps"] = gaps;
        record["nonGaps"] = nonGaps;
        record["weight"] = report.weight;
        record["classification"] = label;
        record["firstNonGap"] = report.has_first_non_gap
                                    ? nlohmann::ordered_json(report.first_non_gap)
                                    : nlohmann::ordered_json(nullptr);
        out_ << record.dump() << '\n';
        break;
      }
      case OutputFormat::Csv:
        if (!headerWritten_) {
          out_ << "genus,gaps,nonGaps,weight,classification,firstNonGap\n";
          headerWritten_ = true;
        }
        out_ << genus << ",\"" << join(gaps, ',') << "\",\"" << join(nonGaps, ',')
             << "\"," << report.weight << ',' << label << ',';
        if (report.has_first_non_gap) out_ << report.first_non_gap;
        out_ << '\n';
        break;
      case OutputFormat::Plain:
        out_ << "genus=" << genus << " gaps={" << join(gaps, ',') << "} nonGaps={"
             << join(nonGaps, ',') << "} weight=" << report.weight
             << " classification=" << label << " firstNonGap=";
        if (report.has_first_non_gap) {
          out_ << report.first_non_gap;
        } else {
          out_ << '-';
        }
        out_ << '\n';
        break;
    }
  }

  static void callback(void* user, const wgap_sequence* seq) {
    static_cast<RecordWriter*>(user)->write(seq);
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
  bool headerWritten_ = false;
};

// Validates --gaps/--genus input; on failure prints the reason and sets
// `exitCode`.
SequencePtr loadSequence(std::int64_t genus, const std::string& gapsText,
                         std::ostream& out, std::ostream& err, int& exitCode) {
  const auto gaps = parseIntegerList(gapsText);
  wgap_sequence* raw = nullptr;
  wgap_validation_error error{};
  const auto status = wgap_validate(genus, gaps.data(), gaps.size(), &raw, &error);
  if (status == WGAP_INVALID_SEQUENCE) {
    out << "invalid: " << wgap_validation_kind_name(error.kind);
    if (error.has_witness) {
      out << " witness (" << error.gap << "," << error.summand_a << ","
          << error.summand_b << ")";
    }
    out << '\n';
    exitCode = kExitInvalid;
    return nullptr;
  }
  if (status != WGAP_OK) {
    exitCode = reportFailure(err, status);
    return nullptr;
  }
  exitCode = kExitOk;
  return SequencePtr(raw);
}

void writeCount(std::ostream& out, OutputFormat format, std::int64_t genus,
                std::uint64_t count, bool header) {
  switch (format) {
    case OutputFormat::Jsonl: {
      nlohmann::ordered_json row;
      row["genus"] = genus;
      row["count"] = count;
      out << row.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      if (header) out << "genus,count\n";
      out << genus << ',' << count << '\n';
      break;
    case OutputFormat::Plain:
      out << "genus " << genus << ": " << count << '\n';
      break;
  }
}

// Tree count, consulting and extending the on-disk cache when configured.
wgap_status cachedCount(const CliConfig& config, std::int64_t genus, std::uint64_t& count) {
  if (!config.cachePath) return wgap_tree_count(genus, config.workers, &count);
  TablePtr table;
  if (std::filesystem::exists(*config.cachePath)) {
    wgap_count_table* raw = nullptr;
    if (auto s = wgap_count_table_load(config.cachePath->c_str(), &raw); s != WGAP_OK) {
      return s;
    }
    table.reset(raw);
  } else {
    table.reset(wgap_count_table_new());
  }
  if (wgap_count_table_lookup(table.get(), genus, &count)) return WGAP_OK;
  if (auto s = wgap_tree_count(genus, config.workers, &count); s != WGAP_OK) return s;
  if (auto s = wgap_count_table_add(table.get(), genus, count); s != WGAP_OK) return s;
  return wgap_count_table_save(table.get(), config.cachePath->c_str());
}

struct Arguments {
  std::int64_t genus = -1;
  std::int64_t maxGenus = -1;
  bool oracle = false;
  std::string filter;
  std::string gaps;
  std::int64_t h = 0;
  std::int64_t k = 0;
  std::string format;
  std::optional<unsigned> workers;
  std::optional<std::int64_t> bruteForceLimit;
  std::optional<std::string> cachePath;
};

OutputFormat parseFormat(const std::string& name) {
  if (name == "jsonl") return OutputFormat::Jsonl;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "plain") return OutputFormat::Plain;
  throw InputError("unknown output format '" + name + "'");
}

int runCount(const Arguments& a, const CliConfig& config, std::ostream& out,
             std::ostream& err) {
  if (a.maxGenus >= 0) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(a.maxGenus + 1));
    if (auto s = wgap_count_by_genus(a.maxGenus, config.workers, counts.data()); s != WGAP_OK) {
      return reportFailure(err, s);
    }
    for (std::int64_t g = 0; g <= a.maxGenus; ++g) {
      writeCount(out, config.outputFormat, g, counts[static_cast<std::size_t>(g)], g == 0);
    }
    return kExitOk;
  }
  if (a.genus < 0) throw InputError("count needs --genus G or --max-genus M");
  std::uint64_t count = 0;
  const auto status =
      a.oracle ? wgap_brute_force_enumerate(a.genus, config.bruteForceLimit, nullptr,
                                            nullptr, &count)
               : cachedCount(config, a.genus, count);
  if (status != WGAP_OK) return reportFailure(err, status);
  writeCount(out, config.outputFormat, a.genus, count, true);
  return kExitOk;
}

int runEnumerate(const Arguments& a, const CliConfig& config, std::ostream& out,
                 std::ostream& err) {
  RecordWriter writer(out, config.outputFormat);
  const auto status =
      a.filter.empty()
          ? wgap_tree_enumerate(a.genus, config.workers, &RecordWriter::callback,
                                &writer, nullptr)
          : wgap_filter_enumerate(a.genus, a.filter.c_str(), config.workers,
                                  &RecordWriter::callback, &writer, nullptr);
  return status == WGAP_OK ? kExitOk : reportFailure(err, status);
}

int runWeight(const Arguments& a, const CliConfig& config, std::ostream& out,
              std::ostream& err) {
  int code = kExitOk;
  auto seq = loadSequence(a.genus, a.gaps, err, err, code);
  if (!seq) return code;
  wgap_weight_report r{};
  if (auto s = wgap_classify(seq.get(), &r); s != WGAP_OK) return reportFailure(err, s);
  const char* label = wgap_classification_name(r.classification);
  switch (config.outputFormat) {
    case OutputFormat::Jsonl: {
      nlohmann::ordered_json j;
      j["weight"] = r.weight;
      j["isWeierstrass"] = r.is_weierstrass != 0;
      j["classification"] = label;
      j["firstNonGap"] = r.has_first_non_gap ? nlohmann::ordered_json(r.first_non_gap)
                                             : nlohmann::ordered_json(nullptr);
      j["exceptionalShape"] = r.exceptional_shape != 0;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "weight,isWeierstrass,classification,firstNonGap,exceptionalShape\n"
          << r.weight << ',' << (r.is_weierstrass ? "true" : "false") << ',' << label
          << ',';
      if (r.has_first_non_gap) out << r.first_non_gap;
      out << ',' << (r.exceptional_shape ? "true" : "false") << '\n';
      break;
    case OutputFormat::Plain:
      out << "weight " << r.weight << '\n'
          << "isWeierstrass " << (r.is_weierstrass ? "true" : "false") << '\n'
          << "classification " << label << '\n'
          << "firstNonGap ";
      if (r.has_first_non_gap) {
        out << r.first_non_gap;
      } else {
        out << '-';
      }
      out << '\n' << "exceptionalShape " << (r.exceptional_shape ? "true" : "false") << '\n';
      break;
  }
  return kExitOk;
}

int runLadder(const Arguments& a, const CliConfig& config, std::ostream& out,
              std::ostream& err) {
  int code = kExitOk;
  auto seq = loadSequence(a.genus, a.gaps, err, err, code);
  if (!seq) return code;
  wgap_ladder* raw = nullptr;
  if (auto s = wgap_ladder_from_gaps(seq.get(), &raw); s != WGAP_OK) {
    return reportFailure(err, s);
  }
  LadderPtr ladder(raw);
  std::vector<std::int64_t> h0(wgap_ladder_h0(ladder.get(), nullptr, 0));
  std::vector<std::int64_t> sp(wgap_ladder_speciality(ladder.get(), nullptr, 0));
  wgap_ladder_h0(ladder.get(), h0.data(), h0.size());
  wgap_ladder_speciality(ladder.get(), sp.data(), sp.size());

  struct Law {
    std::string name;
    bool passed;
    std::int64_t index;
  };
  std::vector<Law> laws;
  int allPassed = 0;
  auto collect = [](void* user, const char* law, int passed, std::int64_t index) {
    static_cast<std::vector<Law>*>(user)->push_back({law, passed != 0, index});
  };
  if (auto s = wgap_verify_ladder_laws(ladder.get(), collect, &laws, &allPassed);
      s != WGAP_OK) {
    return reportFailure(err, s);
  }

  switch (config.outputFormat) {
    case OutputFormat::Jsonl: {
      nlohmann::ordered_json rows;
      rows["genus"] = a.genus;
      rows["h0"] = h0;
      rows["i"] = sp;
      out << rows.dump() << '\n';
      for (const auto& law : laws) {
        nlohmann::ordered_json j;
        j["law"] = law.name;
        j["passed"] = law.passed;
        j["firstOffendingIndex"] = law.passed ? nlohmann::ordered_json(nullptr)
                                              : nlohmann::ordered_json(law.index);
        out << j.dump() << '\n';
      }
      break;
    }
    case OutputFormat::Csv:
      out << "h0," << join(h0, ',') << '\n' << "i," << join(sp, ',') << '\n';
      out << "law,passed,firstOffendingIndex\n";
      for (const auto& law : laws) {
        out << law.name << ',' << (law.passed ? "true" : "false") << ',';
        if (!law.passed) out << law.index;
        out << '\n';
      }
      break;
    case OutputFormat::Plain:
      out << "h0: " << join(h0, ' ') << '\n' << "i:  " << join(sp, ' ') << '\n';
      for (const auto& law : laws) {
        out << (law.passed ? "pass " : "FAIL ") << law.name;
        if (!law.passed) out << " (index " << law.index << ")";
        out << '\n';
      }
      break;
  }
  return allPassed ? kExitOk : kExitInvalid;
}

int runBounds(const Arguments& a, const CliConfig& config, std::ostream& out,
              std::ostream& err) {
  wgap_point_count_bounds b{};
  if (auto s = wgap_point_count_bounds_for(a.genus, &b); s != WGAP_OK) {
    return reportFailure(err, s);
  }
  switch (config.outputFormat) {
    case OutputFormat::Jsonl: {
      nlohmann::ordered_json j;
      j["genus"] = b.genus;
      j["lower"] = b.lower;
      j["upper"] = b.upper;
      j["totalWeight"] = b.total_weight;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "genus,lower,upper,totalWeight\n"
          << b.genus << ',' << b.lower << ',' << b.upper << ',' << b.total_weight << '\n';
      break;
    case OutputFormat::Plain:
      out << "genus " << b.genus << "\nlower " << b.lower << "\nupper " << b.upper
          << "\ntotalWeight " << b.total_weight << '\n';
      break;
  }
  return kExitOk;
}

int runJenkins(const Arguments& a, std::ostream& out, std::ostream& err) {
  int forced = 0;
  if (auto s = wgap_jenkins_forced_gap(a.h, a.k, a.genus, &forced); s != WGAP_OK) {
    return reportFailure(err, s);
  }
  out << (forced ? "forced-gap" : "not-forced") << '\n';
  return kExitOk;
}

int runSelftest(const Arguments& a, const CliConfig& config, std::ostream& out,
                std::ostream& err) {
  int allPassed = 0;
  auto print = [](void* user, const char* name, int passed, const char* detail) {
    *static_cast<std::ostream*>(user)
        << (passed ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  };
  const auto status = wgap_selftest(a.maxGenus, config.bruteForceLimit, config.workers,
                                    print, &out, &allPassed);
  if (status != WGAP_OK) return reportFailure(err, status);
  return allPassed ? kExitOk : kExitInvalid;
}

}  // namespace

CliConfig configFromEnvironment() {
  CliConfig config;
  config.workers = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WGAP_WORKERS")) {
    unsigned value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
      config.workers = value;
    }
  }
  return config;
}

int runCommand(const std::vector<std::string>& args, const CliConfig& defaults,
               std::ostream& out, std::ostream& err) {
  CLI::App app{"Weierstrass gap sequences: enumerate, validate and analyse", "wgap"};
  app.require_subcommand(1);
  Arguments a;
  app.add_option("--workers", a.workers, "worker threads (overrides WGAP_WORKERS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", a.format, "jsonl, csv or plain");
  app.add_option("--brute-force-limit", a.bruteForceLimit,
                 "largest genus accepted by the brute-force oracle")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cache", a.cachePath, "CSV file caching tree counts");

  auto* count = app.add_subcommand("count", "number of gap sequences of a genus");
  auto* countGenus = count->add_option("--genus", a.genus)->check(CLI::NonNegativeNumber);
  auto* countMax = count->add_option("--max-genus", a.maxGenus, "table for genus 0..M")
                       ->check(CLI::NonNegativeNumber);
  countGenus->excludes(countMax);
  count->add_flag("--oracle", a.oracle, "use the brute-force oracle");

  auto* enumerate = app.add_subcommand("enumerate", "one record per gap sequence");
  enumerate->add_option("--genus", a.genus)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--filter", a.filter,
                        "firstNonGap=H, weight=W or classification=LABEL");

  auto* validate = app.add_subcommand("validate", "check a candidate gap list");
  auto* weight = app.add_subcommand("weight", "weight and classification");
  auto* ladder = app.add_subcommand("ladder", "dimension ladder and its laws");
  for (auto* sub : {validate, weight, ladder}) {
    sub->add_option("--gaps", a.gaps, "comma-separated gaps, ascending")->required();
    sub->add_option("--genus", a.genus)->required();
  }

  auto* bounds = app.add_subcommand("bounds", "Weierstrass point count bounds");
  bounds->add_option("--genus", a.genus)->required();

  auto* jenkins = app.add_subcommand("jenkins", "is k forced to be a gap");
  jenkins->set_help_flag("--help", "Print this help message and exit");
  jenkins->add_option("--h", a.h, "first non-gap")->required();
  jenkins->add_option("--k", a.k)->required();
  jenkins->add_option("--genus", a.genus)->required();

  auto* selftest = app.add_subcommand("selftest", "run the consistency suite");
  selftest->add_option("--max-genus", a.maxGenus)->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
  }

  CliConfig config = defaults;
  try {
    if (a.workers) config.workers = *a.workers;
    if (!a.format.empty()) config.outputFormat = parseFormat(a.format);
    if (a.bruteForceLimit) config.bruteForceLimit = *a.bruteForceLimit;
    if (a.cachePath) config.cachePath = a.cachePath;

    if (count->parsed()) return runCount(a, config, out, err);
    if (enumerate->parsed()) return runEnumerate(a, config, out, err);
    if (validate->parsed()) {
      int code = kExitOk;
      if (loadSequence(a.genus, a.gaps, out, err, code)) out << "valid\n";
      return code;
    }
    if (weight->parsed()) return runWeight(a, config, out, err);
    if (ladder->parsed()) return runLadder(a, config, out, err);
    if (bounds->parsed()) return runBounds(a, config, out, err);
    if (jenkins->parsed()) return runJenkins(a, out, err);
    if (selftest->parsed()) return runSelftest(a, config, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace wgap::cli
