#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpotts/algebra.hpp"
#include "cpotts/identity_result.hpp"

namespace cpotts {

enum class OutputFormat { Json, Text };

struct SuiteConfig {
  int N = 3;
  Complex k{0.6, 0.0};
  int L = 2;
  int trials = 10;
  std::uint64_t seed = 42;
  /// Overrides every identity's default tolerance when set.
  std::optional<double> tol;
  /// Registered names, or "all".
  std::vector<std::string> identities{"all"};
  OutputFormat format = OutputFormat::Json;
  /// Worker threads for trials; 0 picks the hardware concurrency.
  int threads = 0;
};

/// Names accepted by SuiteConfig::identities, in run order.
const std::vector<std::string>& registered_identities();

/// Throws InputError on N < 1, trials < 1, tol <= 0, L < 1, an unknown
/// identity name, or an oversized transfer matrix.
void validate_config(const SuiteConfig& config);

/// "all" expanded, duplicates dropped, registered order kept for "all".
std::vector<std::string> resolve_identities(const SuiteConfig& config);

/// Seed of one trial, a pure function of (master seed, identity, trial).
std::uint64_t trial_seed(std::uint64_t master, const std::string& identity, int trial);

struct IdentityRun {
  std::string name;
  int trials = 0;
  std::vector<IdentityResult> results;
  double wall_time = 0.0;

  int passed() const;
  int failed() const;
  /// Results recorded without being asserted.
  int unasserted() const;
  /// Largest residual among asserted results (NaN-free).
  double max_residual() const;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<IdentityRun> runs;
  double wall_time = 0.0;

  bool all_pass() const;
};

/// Runs `trials` seeded instances of every requested identity. Trials run on
/// a thread pool; results keep trial order so the report is deterministic.
VerificationReport run_suite(const SuiteConfig& config);

/// JSON report. With include_timing false the wall_time fields are omitted,
/// which makes identical configs produce identical bytes.
std::string report_json(const VerificationReport& report, bool include_timing = true);

/// Aligned plain-text summary plus one line per failing result.
std::string report_text(const VerificationReport& report);

/// "re" or "re,im".
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

}  // namespace cpotts
