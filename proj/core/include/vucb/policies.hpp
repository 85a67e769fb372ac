#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vucb/core.hpp"
#include "vucb/estimation.hpp"

namespace vucb {

enum class PolicyKind { Vucb, Uniform, OracleTracking };

const char* policy_name(PolicyKind k);
std::optional<PolicyKind> parse_policy(std::string_view name);

struct PolicyState {
  std::vector<OnlineMoments> moments;
  std::int64_t t = 0;
  std::int64_t horizon = 0;
  NormParam p;
  UcbProcedure proc;  // used by the V-UCB rule

  std::size_t groups() const { return moments.size(); }
  std::int64_t count(std::size_t g) const { return moments[g].count; }

  static PolicyState init(std::size_t G, const NormParam& p,
                          const UcbProcedure& proc, std::int64_t T);
};

// argmax_g UCB_g^q / n_g with ties to the lowest index; groups with fewer
// than 2 samples score +inf, which yields a deterministic warm-up of exactly
// 2 pulls per group before the UCB rule takes over.
std::size_t vucb_select(const PolicyState& state);

// The bare selection rule on given UCB values and counts (exposed for tests).
std::size_t vucb_argmax(std::span<const double> ucb,
                        std::span<const std::int64_t> n, double q);

std::size_t uniform_select(const PolicyState& state);  // t mod G

// Most under-sampled group relative to the target frequency:
// argmin_g (n_g - t * lambda*_g), ties to the lowest index.
std::size_t oracle_tracking_select(const PolicyState& state,
                                   std::span<const double> lambda_star);

PolicyState policy_step(PolicyState state, std::size_t selected, double y);

struct EpisodeResult {
  std::vector<std::int64_t> counts;
  std::vector<double> means;
  double achieved = 0.0;
  double regret = 0.0;
  std::uint64_t seed = 0;
};

// Mixes a master seed with a run index into an independent per-episode seed
// (splitmix64 finalizer; pinned by a golden test and documented in README).
std::uint64_t episode_seed(std::uint64_t master_seed, std::uint64_t run);

// Runs one full T-step episode of the given policy on the instance.
// The UCB procedure for V-UCB is derived from the instance's family unless
// c_hat is supplied, which forces the sub-gaussian procedure.
EpisodeResult run_episode(PolicyKind policy, const Instance& inst,
                          const NormParam& p, std::int64_t T, std::uint64_t seed,
                          const std::optional<std::vector<double>>& c_hat = std::nullopt);

}  // namespace vucb
