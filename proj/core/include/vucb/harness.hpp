#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vucb/core.hpp"
#include "vucb/policies.hpp"

namespace vucb {

struct ExperimentConfig {
  int schema_version = 1;
  Instance instance;
  NormParam p;
  std::vector<std::int64_t> horizons;
  std::vector<PolicyKind> policies;
  int runs = 1;
  std::uint64_t master_seed = 0;
  std::optional<std::vector<double>> c_hat;
  std::string out_dir = "results";
  int workers = 0;  // 0: VUCB_WORKERS env var, else hardware concurrency

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::string& path);
  nlohmann::ordered_json to_json() const;

  int effective_workers() const;
};

struct RegretSummary {
  PolicyKind policy;
  std::int64_t T = 0;
  int runs = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::optional<double> bound;  // leading-term value when the family applies
};

struct EpisodeRecord {
  PolicyKind policy;
  std::int64_t T = 0;
  int run = 0;
  EpisodeResult result;
};

struct MonteCarloOutput {
  std::vector<RegretSummary> summaries;
  std::vector<EpisodeRecord> episodes;
};

MonteCarloOutput run_monte_carlo(const ExperimentConfig& cfg);

struct EmittedFiles {
  std::string csv_path;
  std::string json_path;
};

// Writes episodes.csv (header `policy,p,T,run,seed,n_counts,R_p,regret_norm`)
// and summary.json (config echo + per-cell statistics). Output bytes depend
// only on the config and results, never on worker count or wall clock.
EmittedFiles emit_results(const ExperimentConfig& cfg, const MonteCarloOutput& out,
                          const std::string& dir);

// Full command-line entry point; returns the process exit code
// (0 ok, 2 configuration/usage error, 1 runtime error).
int cli_dispatch(int argc, const char* const* argv);

std::string format_norm_param(const NormParam& p);

}  // namespace vucb
