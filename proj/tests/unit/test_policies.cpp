#include "doctest.h"

#include <numeric>
#include <random>

#include "vucb/oracle.hpp"
#include "vucb/policies.hpp"

using namespace vucb;

namespace {

Instance gaussian_instance(std::vector<double> sigmas) {
  Instance inst;
  for (double s : sigmas) inst.groups.push_back(GroupDistribution::gaussian(0.0, s));
  return inst;
}

}  // namespace

TEST_CASE("vucb selection rule argmax") {
  const std::vector<double> ucb1{2, 1};
  const std::vector<std::int64_t> n1{4, 4};
  CHECK(vucb_argmax(ucb1, n1, 2.0) == 0);  // scores (1, 0.25)

  const std::vector<double> ucb2{2, 2};
  const std::vector<std::int64_t> n2{3, 3};
  CHECK(vucb_argmax(ucb2, n2, 2.0) == 0);  // tie -> lowest index

  const std::vector<double> ucb3{1, 1};
  const std::vector<std::int64_t> n3{10, 2};
  CHECK(vucb_argmax(ucb3, n3, 1.0) == 1);  // scores (0.1, 0.5)

  // a group below the warm-up threshold always wins
  const std::vector<double> ucb4{100, 1};
  const std::vector<std::int64_t> n4{50, 1};
  CHECK(vucb_argmax(ucb4, n4, 2.0) == 1);

  // scaling every ucb leaves the argmax unchanged
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.5, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> ucb(4);
    std::vector<std::int64_t> n(4);
    for (int g = 0; g < 4; ++g) {
      ucb[g] = unif(rng);
      n[g] = 2 + static_cast<std::int64_t>(10 * unif(rng));
    }
    const double q = 1.0 + unif(rng) / 5.0;
    const auto pick = vucb_argmax(ucb, n, q);
    std::vector<double> scaled(ucb);
    for (auto& u : scaled) u *= 7.3;
    CHECK(vucb_argmax(scaled, n, q) == pick);
  }
}

TEST_CASE("uniform_select is t mod G") {
  auto state = PolicyState::init(3, NormParam::infinite(),
                                 UcbProcedure::gaussian(100), 100);
  state.t = 0;
  CHECK(uniform_select(state) == 0);
  state.t = 4;
  CHECK(uniform_select(state) == 1);
  state.t = 5;
  CHECK(uniform_select(state) == 2);
}

TEST_CASE("oracle tracking follows the target frequency") {
  auto state = PolicyState::init(2, NormParam::infinite(),
                                 UcbProcedure::gaussian(100), 100);
  const std::vector<double> lambda{0.2, 0.8};
  CHECK(oracle_tracking_select(state, lambda) == 0);  // tie at t=0 -> lowest index
  state = policy_step(std::move(state), 0, 0.0);
  CHECK(oracle_tracking_select(state, lambda) == 1);
}

TEST_CASE("policy_step bookkeeping") {
  auto state = PolicyState::init(2, NormParam::infinite(),
                                 UcbProcedure::gaussian(4), 4);
  state = policy_step(std::move(state), 1, 2.5);
  CHECK(state.t == 1);
  CHECK(state.count(0) == 0);
  CHECK(state.count(1) == 1);
  for (int i = 0; i < 3; ++i) state = policy_step(std::move(state), 0, 1.0);
  CHECK(state.count(0) + state.count(1) == state.t);
  CHECK_THROWS_AS(policy_step(std::move(state), 0, 1.0), HorizonExceeded);
}

TEST_CASE("episode seed mixing is pinned") {
  // golden values freeze the master-seed/run-index mixing function
  CHECK(episode_seed(0, 0) == 16294208416658607535ULL);
  CHECK(episode_seed(0, 1) == 7960286522194355700ULL);
  CHECK(episode_seed(42, 0) == 13679457532755275413ULL);
  CHECK(episode_seed(42, 7) == episode_seed(42, 7));
  CHECK(episode_seed(42, 7) != episode_seed(42, 8));
  CHECK(episode_seed(42, 7) != episode_seed(43, 7));
}

TEST_CASE("deterministic episodes") {
  const Instance inst = gaussian_instance({1, 2});
  const auto a = run_episode(PolicyKind::Vucb, inst, NormParam::infinite(), 500, 77);
  const auto b = run_episode(PolicyKind::Vucb, inst, NormParam::infinite(), 500, 77);
  CHECK(a.counts == b.counts);
  CHECK(a.achieved == b.achieved);
  CHECK(a.regret == b.regret);
  const auto c = run_episode(PolicyKind::Vucb, inst, NormParam::infinite(), 500, 78);
  CHECK(a.counts != c.counts);
}

TEST_CASE("episode examples") {
  const Instance inst = gaussian_instance({1, 2});
  {
    const auto r =
        run_episode(PolicyKind::OracleTracking, inst, NormParam::infinite(), 10, 1);
    CHECK(r.counts == std::vector<std::int64_t>{2, 8});
    CHECK(r.regret == doctest::Approx(0.0));
  }
  {
    const auto r =
        run_episode(PolicyKind::Uniform, inst, NormParam::infinite(), 10, 1);
    CHECK(r.counts == std::vector<std::int64_t>{5, 5});
    CHECK(r.achieved == doctest::Approx(0.8));
    CHECK(r.regret == doctest::Approx(0.6));
  }
}

TEST_CASE("conservation and warm-up across policies") {
  const Instance inst = gaussian_instance({0.5, 1.0, 2.5});
  for (auto policy :
       {PolicyKind::Vucb, PolicyKind::Uniform, PolicyKind::OracleTracking}) {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const auto r = run_episode(policy, inst, NormParam::infinite(), 200, seed);
      CHECK(std::accumulate(r.counts.begin(), r.counts.end(), std::int64_t{0}) == 200);
      if (policy == PolicyKind::Vucb)
        for (auto n : r.counts) CHECK(n >= 2);
    }
  }
  CHECK_THROWS_AS(
      run_episode(PolicyKind::Vucb, inst, NormParam::infinite(), 5, 1),
      HorizonTooSmall);
}

TEST_CASE("vucb tracks the optimal allocation at long horizons") {
  const Instance inst = gaussian_instance({1, 2, 3});
  const NormParam p = NormParam::infinite();
  const auto opt = optimal_allocation(inst.sigmas(), p, 20000.0);
  int good = 0;
  const int runs = 20;
  for (int run = 0; run < runs; ++run) {
    const auto r = run_episode(PolicyKind::Vucb, inst, p, 20000, episode_seed(5, run));
    double worst = 1.0;
    for (int g = 0; g < 3; ++g)
      worst = std::min(worst, static_cast<double>(r.counts[g]) / opt.n_star.counts[g]);
    if (worst > 0.5) ++good;
  }
  CHECK(good >= 19);
}

TEST_CASE("mixed-family instance needs c_hat for vucb") {
  Instance inst;
  inst.groups.push_back(GroupDistribution::shifted_bounded(0, 1, 0.3));
  inst.groups.push_back(GroupDistribution::gaussian(0, 1));
  CHECK_THROWS_AS(run_episode(PolicyKind::Vucb, inst, NormParam::infinite(), 100, 1),
                  MissingParameter);
  CHECK_NOTHROW(run_episode(PolicyKind::Vucb, inst, NormParam::infinite(), 100, 1,
                            std::vector<double>{1.0, 1.5}));
}
