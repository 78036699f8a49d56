#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "app/report.hpp"

namespace sqzero::app {

// Stable exit codes.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitNotNonnegative = 3;
inline constexpr int kExitInputError = 64;

struct CommandResult {
  int exit_code = 0;
  Json report;
};

struct CommonOptions {
  std::uint64_t seed = 0;
  std::size_t nmf_restarts = 8;
  std::optional<double> max_cover_time;  // seconds
  std::optional<double> time_limit;      // seconds; bounds the cover search as well

  BoundsOptions bounds() const;
};

struct AnalyzeOptions {
  std::filesystem::path input;
  CommonOptions common;
  /// Writes T.mat, M.mat, N.mat there on a yes verdict.
  std::optional<std::filesystem::path> emit_witness;
};
CommandResult run_analyze(const AnalyzeOptions& o);

struct VerifyOptions {
  std::filesystem::path t, m, n;
};
CommandResult run_verify(const VerifyOptions& o);

struct CommutatorOptions {
  std::filesystem::path m, n;
};
CommandResult run_commutator(const CommutatorOptions& o);

struct CounterexampleOptions {
  CommonOptions common;
  std::uint64_t lemma_trials = 1000;
  std::uint64_t search_trials = 10000;
  unsigned threads = 1;
};
CommandResult run_counterexample(const CounterexampleOptions& o);

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t witness_cases = 1000;
  std::size_t commutator_cases = 300;
  std::size_t max_first = 6, max_middle = 6, max_last = 6;
  std::uint64_t max_entry = 3;
  std::uint64_t denominator = 1;
  double density = 0.5;
  std::size_t max_rejects = 200;
  std::filesystem::path output_dir = "fuzz-reproducers";

  /// Throws PreconditionError on unknown keys or out-of-range values.
  static FuzzConfig from_json(const Json& j);
  Json to_json() const;
};

struct FuzzOptions {
  std::optional<std::filesystem::path> config;  // defaults when absent
  std::optional<std::uint64_t> seed;            // overrides the config seed
  bool self_test_mutate = false;
  CommonOptions common;
};
CommandResult run_fuzz(const FuzzOptions& o);

}  // namespace sqzero::app
