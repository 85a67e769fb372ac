#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vucb/harness.hpp"

using namespace vucb;
namespace fs = std::filesystem;

namespace {

nlohmann::json base_config() {
  return nlohmann::json{
      {"schema_version", 1},
      {"instance",
       {{"groups",
         {{{"family", "gaussian"}, {"mu", 0.0}, {"sigma", 1.0}},
          {{"family", "gaussian"}, {"mu", 0.0}, {"sigma", 2.0}}}}}},
      {"p", "inf"},
      {"horizons", {10}},
      {"policies", {"oracle", "uniform"}},
      {"runs", 5},
      {"seed", 123}};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("vucb_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing and diagnostics") {
  const ExperimentConfig cfg = ExperimentConfig::from_json(base_config());
  CHECK(cfg.instance.size() == 2);
  CHECK(cfg.p.is_infinite());
  CHECK(cfg.runs == 5);
  CHECK(cfg.master_seed == 123);

  auto bad = base_config();
  bad.erase("p");
  CHECK_THROWS_AS(ExperimentConfig::from_json(bad), ConfigError);

  auto bad_policy = base_config();
  bad_policy["policies"] = {"thompson"};
  CHECK_THROWS_AS(ExperimentConfig::from_json(bad_policy), ConfigError);

  auto small_T = base_config();
  small_T["policies"] = {"vucb"};
  small_T["horizons"] = {3};
  CHECK_THROWS_AS(ExperimentConfig::from_json(small_T), ConfigError);

  // sub-gaussian-only instance without c_hat is rejected for vucb
  auto bounded = base_config();
  bounded["instance"]["groups"] = {
      nlohmann::json{{"family", "shifted_bounded"}, {"lo", 0.0}, {"hi", 1.0}, {"mu", 0.3}},
      nlohmann::json{{"family", "shifted_bounded"}, {"lo", 0.0}, {"hi", 2.0}, {"mu", 1.0}}};
  bounded["policies"] = {"vucb"};
  bounded["horizons"] = {100};
  CHECK_THROWS_AS(ExperimentConfig::from_json(bounded), ConfigError);
  bounded["c_hat"] = {1.0, 2.0};
  CHECK_NOTHROW(ExperimentConfig::from_json(bounded));
}

TEST_CASE("config echo round-trips") {
  const ExperimentConfig cfg = ExperimentConfig::from_json(base_config());
  const ExperimentConfig again = ExperimentConfig::from_json(cfg.to_json());
  CHECK(again.to_json() == cfg.to_json());
}

TEST_CASE("monte carlo on deterministic policies") {
  const ExperimentConfig cfg = ExperimentConfig::from_json(base_config());
  const MonteCarloOutput out = run_monte_carlo(cfg);
  REQUIRE(out.summaries.size() == 2);
  for (const auto& s : out.summaries) {
    if (s.policy == PolicyKind::OracleTracking) {
      CHECK(s.mean == doctest::Approx(0.0));
      CHECK(s.std_error == doctest::Approx(0.0));
    } else {
      CHECK(s.mean == doctest::Approx(0.6));
      CHECK(s.std_error == doctest::Approx(0.0));
    }
    CHECK(s.bound.has_value());  // all-gaussian instance carries its bound
  }

  // summary mean equals the mean over episode records
  for (const auto& s : out.summaries) {
    double sum = 0.0;
    int count = 0;
    for (const auto& e : out.episodes)
      if (e.policy == s.policy && e.T == s.T) {
        sum += e.result.regret;
        ++count;
      }
    CHECK(count == s.runs);
    CHECK(s.mean == doctest::Approx(sum / count).epsilon(1e-12));
  }
}

TEST_CASE("emitted files are deterministic and worker independent") {
  auto j = base_config();
  j["policies"] = {"vucb", "uniform"};
  j["horizons"] = {200};
  j["runs"] = 8;

  std::string first_csv, first_json;
  for (int workers : {1, 3, 8}) {
    auto cfg = ExperimentConfig::from_json(j);
    cfg.workers = workers;
    const auto out = run_monte_carlo(cfg);
    const auto dir = fresh_dir("workers_" + std::to_string(workers));
    const auto files = emit_results(cfg, out, dir.string());
    const std::string csv = slurp(files.csv_path);
    const std::string json = slurp(files.json_path);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "policy,p,T,run,seed,n_counts,R_p,regret_norm");
    if (first_csv.empty()) {
      first_csv = csv;
      first_json = json;
    } else {
      CHECK(csv == first_csv);
      // only the echoed worker count may differ between the JSON outputs
      auto scrub = [](std::string s, int w) {
        const std::string needle = "\"workers\": " + std::to_string(w);
        const auto pos = s.find(needle);
        if (pos != std::string::npos) s.replace(pos, needle.size(), "\"workers\": X");
        return s;
      };
      CHECK(scrub(json, workers) == scrub(first_json, 1));
    }
    fs::remove_all(dir);
  }
}

TEST_CASE("empty results emit a header-only csv") {
  const ExperimentConfig cfg = ExperimentConfig::from_json(base_config());
  const auto dir = fresh_dir("empty");
  const auto files = emit_results(cfg, MonteCarloOutput{}, dir.string());
  CHECK(slurp(files.csv_path) == "policy,p,T,run,seed,n_counts,R_p,regret_norm\n");
  fs::remove_all(dir);
}

TEST_CASE("cli exit codes") {
  {
    const char* argv[] = {"vucb", "sample-size", "--eps", "0.1", "--groups", "3"};
    CHECK(cli_dispatch(6, argv) == 0);
  }
  {
    const char* argv[] = {"vucb", "simulate", "--config", "/nonexistent.json"};
    CHECK(cli_dispatch(4, argv) == 2);
  }
  {
    const char* argv[] = {"vucb", "frobnicate"};
    CHECK(cli_dispatch(2, argv) == 2);
  }
  {
    const char* argv[] = {"vucb", "check", "taylor", "--trials", "1000",
                          "--seed", "5"};
    CHECK(cli_dispatch(7, argv) == 0);
  }
  {
    const char* argv[] = {"vucb", "theory", "bound", "--family", "gaussian",
                          "--sigma", "1,2,3", "--p", "inf", "--T", "100000"};
    CHECK(cli_dispatch(11, argv) == 0);
  }
  {
    // missing c_hat for a sub-gaussian bound is a config error
    const char* argv[] = {"vucb", "theory", "bound", "--family", "subgaussian",
                          "--sigma", "1,2", "--p", "inf", "--T", "1000"};
    CHECK(cli_dispatch(11, argv) == 2);
  }
}

TEST_CASE("simulate writes a config whose echo reloads") {
  const auto dir = fresh_dir("roundtrip");
  const auto cfg_path = dir / "config.json";
  {
    std::ofstream out(cfg_path);
    out << base_config().dump(2);
  }
  const char* argv[] = {"vucb",  "simulate",
                        "--config", nullptr,
                        "--out",    nullptr};
  const std::string cfg_str = cfg_path.string();
  const std::string out_str = (dir / "results").string();
  argv[3] = cfg_str.c_str();
  argv[5] = out_str.c_str();
  CHECK(cli_dispatch(6, argv) == 0);

  const auto summary = nlohmann::json::parse(slurp((dir / "results" / "summary.json").string()));
  CHECK_NOTHROW(ExperimentConfig::from_json(summary.at("config")));
  fs::remove_all(dir);
}
