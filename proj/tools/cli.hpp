#ifndef WGAP_TOOLS_CLI_HPP
#define WGAP_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wgap::cli {

enum class OutputFormat { Jsonl, Csv, Plain };

struct CliConfig {
  unsigned workers = 1;
  std::int64_t bruteForceLimit = 14;
  OutputFormat outputFormat = OutputFormat::Jsonl;
  std::optional<std::string> cachePath;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitInvalid = 2;

/// Defaults: hardware parallelism, overridden by WGAP_WORKERS when set.
CliConfig configFromEnvironment();

/// Runs one subcommand. `args` excludes the program name. Global flags in
/// `args` (--workers, --format, --brute-force-limit, --cache) override
/// `config`. Records go to `out`, diagnostics to `err`.
int runCommand(const std::vector<std::string>& args, const CliConfig& config,
               std::ostream& out, std::ostream& err);

}  // namespace wgap::cli

#endif  // WGAP_TOOLS_CLI_HPP
