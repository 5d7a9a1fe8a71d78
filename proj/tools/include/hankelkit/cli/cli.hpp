#ifndef HANKELKIT_CLI_CLI_HPP
#define HANKELKIT_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hankelkit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDisagreement = 1,
  kBudgetExhausted = 2,
  kEmptySearch = 3,
  kUsage = 64,
};

enum class Format { json, csv, text };

struct RunConfig {
  std::string subcommand;
  std::string objective;
  double tol = 1e-7;
  std::size_t budget = 10'000'000;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  std::size_t n = 3;
  bool a2_zero = false;
  std::string function = "koebe";
  std::size_t cutoff = 7;
  Format format = Format::text;
  std::string out_path;
  bool acknowledge_discrepancies = false;
};

/// Parses argv and runs one subcommand. Reports go to `out` (or to the
/// --out file), diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace hankelkit::cli

#endif // HANKELKIT_CLI_CLI_HPP
