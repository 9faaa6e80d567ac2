#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dyckhankel/verify.hpp"

namespace dyckhankel {

/// Largest modulus accepted on the command line.
inline constexpr int kMaxModulus = 16;

/// Environment variable holding the default worker count for `verify`.
inline constexpr const char* kJobsEnv = "DYCKHANKEL_JOBS";

enum class OutputFormat { plain, json, csv };

/// Exit statuses of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_guard = 3 };

struct RunConfig {
  std::string subcommand;
  // count
  int n = 0;
  std::string set_spec;
  std::string dump_paths;
  // hankel
  std::string series_spec = "catalan";
  int shift = 0;
  int terms = 10;
  // tau
  int m = 0;
  int r = 0;
  // verify
  std::string scope = "all";
  int m_min = 2;
  int m_max = 8;
  VerifyMode mode = VerifyMode::both;
  int jobs = 1;
  std::uint64_t seed = ClassicalOptions{}.seed;
  // overrides, 0 meaning the default
  int order = 0;
  int n_max = 0;
  // output
  OutputFormat format = OutputFormat::plain;
  std::string output;
};

/// Parses argv, runs the subcommand and writes its report to `out` (or the
/// --output file). Diagnostics go to `err`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration.
int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dyckhankel
