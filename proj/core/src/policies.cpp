#include "vucb/policies.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string_view>

#include "vucb/oracle.hpp"

namespace vucb {

const char* policy_name(PolicyKind k) {
  switch (k) {
    case PolicyKind::Vucb: return "vucb";
    case PolicyKind::Uniform: return "uniform";
    case PolicyKind::OracleTracking: return "oracle";
  }
  return "?";
}

std::optional<PolicyKind> parse_policy(std::string_view name) {
  if (name == "vucb") return PolicyKind::Vucb;
  if (name == "uniform") return PolicyKind::Uniform;
  if (name == "oracle") return PolicyKind::OracleTracking;
  return std::nullopt;
}

PolicyState PolicyState::init(std::size_t G, const NormParam& p,
                              const UcbProcedure& proc, std::int64_t T) {
  PolicyState s;
  s.moments.assign(G, OnlineMoments{});
  s.p = p;
  s.proc = proc;
  s.horizon = T;
  return s;
}

std::size_t vucb_argmax(std::span<const double> ucb,
                        std::span<const std::int64_t> n, double q) {
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t g = 0; g < ucb.size(); ++g) {
    double score;
    if (n[g] < 2) {
      score = std::numeric_limits<double>::infinity();
    } else {
      score = std::pow(ucb[g], q) / static_cast<double>(n[g]);
    }
    if (score > best_score) {
      best_score = score;
      best = g;
    }
  }
  return best;
}

std::size_t vucb_select(const PolicyState& state) {
  const double q = exponent(state.p);
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t g = 0; g < state.groups(); ++g) {
    double score;
    if (state.moments[g].count < 2) {
      score = std::numeric_limits<double>::infinity();
    } else {
      score = std::pow(ucb_value(state.proc, g, state.moments[g]), q) /
              static_cast<double>(state.moments[g].count);
    }
    if (score > best_score) {
      best_score = score;
      best = g;
    }
  }
  return best;
}

std::size_t uniform_select(const PolicyState& state) {
  return static_cast<std::size_t>(state.t % static_cast<std::int64_t>(state.groups()));
}

std::size_t oracle_tracking_select(const PolicyState& state,
                                   std::span<const double> lambda_star) {
  std::size_t best = 0;
  double best_deficit = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < state.groups(); ++g) {
    const double deficit = static_cast<double>(state.moments[g].count) -
                           static_cast<double>(state.t) * lambda_star[g];
    if (deficit < best_deficit) {
      best_deficit = deficit;
      best = g;
    }
  }
  return best;
}

namespace {

void step_in_place(PolicyState& state, std::size_t selected, double y) {
  if (state.t >= state.horizon) throw HorizonExceeded("policy_step past the horizon");
  state.moments[selected] = update_moments(state.moments[selected], y);
  state.t += 1;
}

}  // namespace

PolicyState policy_step(PolicyState state, std::size_t selected, double y) {
  step_in_place(state, selected, y);
  return state;
}

std::uint64_t episode_seed(std::uint64_t master_seed, std::uint64_t run) {
  std::uint64_t x = master_seed + 0x9E3779B97F4A7C15ULL * (run + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

UcbProcedure derive_procedure(const Instance& inst, std::int64_t T,
                              const std::optional<std::vector<double>>& c_hat) {
  if (c_hat) {
    if (c_hat->size() != inst.size())
      throw MissingParameter("c_hat must have one entry per group");
    return UcbProcedure::sub_gaussian(*c_hat, static_cast<double>(T));
  }
  const bool all_gaussian = std::all_of(
      inst.groups.begin(), inst.groups.end(),
      [](const GroupDistribution& g) { return g.family == Family::Gaussian; });
  if (all_gaussian) return UcbProcedure::gaussian(static_cast<double>(T));
  const bool all_exponential = std::all_of(
      inst.groups.begin(), inst.groups.end(),
      [](const GroupDistribution& g) { return g.family == Family::Exponential; });
  if (all_exponential) return UcbProcedure::exponential(static_cast<double>(T));
  throw MissingParameter(
      "instance family needs the sub-gaussian procedure: supply c_hat");
}

}  // namespace

EpisodeResult run_episode(PolicyKind policy, const Instance& inst,
                          const NormParam& p, std::int64_t T, std::uint64_t seed,
                          const std::optional<std::vector<double>>& c_hat) {
  validate_instance(inst);
  const std::size_t G = inst.size();
  if (policy == PolicyKind::Vucb && T < 2 * static_cast<std::int64_t>(G))
    throw HorizonTooSmall("vucb needs T >= 2G for the warm-up");
  if (T < 1) throw HorizonTooSmall("T >= 1 required");

  const std::vector<double> sigma = inst.sigmas();
  const OptimalAllocation opt = optimal_allocation(sigma, p, static_cast<double>(T));

  UcbProcedure proc = policy == PolicyKind::Vucb
                          ? derive_procedure(inst, T, c_hat)
                          : UcbProcedure::gaussian(std::max<double>(2.0, T));
  PolicyState state = PolicyState::init(G, p, proc, T);
  std::mt19937_64 rng(seed);

  for (std::int64_t t = 0; t < T; ++t) {
    std::size_t g;
    switch (policy) {
      case PolicyKind::Vucb: g = vucb_select(state); break;
      case PolicyKind::Uniform: g = uniform_select(state); break;
      case PolicyKind::OracleTracking:
        g = oracle_tracking_select(state, opt.lambda_star);
        break;
      default: throw Error("unknown policy");
    }
    step_in_place(state, g, inst.groups[g].sample(rng));
  }

  EpisodeResult out;
  out.seed = seed;
  out.counts.reserve(G);
  out.means.reserve(G);
  std::vector<double> counts_real;
  counts_real.reserve(G);
  for (std::size_t g = 0; g < G; ++g) {
    out.counts.push_back(state.moments[g].count);
    out.means.push_back(state.moments[g].mean);
    counts_real.push_back(static_cast<double>(state.moments[g].count));
  }
  const bool any_zero = std::any_of(out.counts.begin(), out.counts.end(),
                                    [](std::int64_t n) { return n == 0; });
  if (any_zero) {
    out.achieved = std::numeric_limits<double>::infinity();
    out.regret = std::numeric_limits<double>::infinity();
  } else {
    out.achieved = objective_Rp(std::span<const double>(counts_real), sigma, p);
    out.regret = normalized_regret(out.achieved, opt.r_star);
  }
  return out;
}

}  // namespace vucb
