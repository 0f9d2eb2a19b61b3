#include <doctest.h>

#include <algorithm>

#include "evpsim/io.hpp"

using namespace evpsim;

namespace {

std::string config_error(const std::string& text) {
  try {
    parse_experiment(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("empty file gives the documented defaults") {
  const ExperimentSpec s = parse_experiment("");
  CHECK(s.config == SimulationConfig{});
  CHECK(s.strategy == AdversaryStrategy::front_runner());
  CHECK(s.utility == UtilityKind::absolute);
  CHECK(s.trials == 100);
  CHECK(s.subset_budget == 256);
  CHECK(s.fairness_delta == 0.1);
}

TEST_CASE("keys, comments and whitespace") {
  const ExperimentSpec s = parse_experiment(
      "# header\n"
      "n = 6   # participants\n"
      "  coalition_size=2\n"
      "\n"
      "p = 0.001\n"
      "protocol = fruitchain\n"
      "p_fruit = 0.01\n"
      "strategy = withholder\n"
      "withheld_queries = 4\n"
      "utility = absolute_minus_cost\n"
      "reward_schedule = 1:1, 50:2.5\n"
      "rounds = 100");
  CHECK(s.config.n == 6);
  CHECK(s.config.coalition_size == 2);
  CHECK(s.config.protocol == ProtocolKind::fruitchain);
  CHECK(s.config.withheld_queries == std::vector<int>{4, 4});
  CHECK(s.strategy.kind == StrategyKind::fixed_cost_withholder);
  CHECK(s.config.reward_schedule == std::vector<RewardEpoch>{{1, 1.0}, {50, 2.5}});
  CHECK(s.config.rounds == 100);
}

TEST_CASE("rounds and reward epochs derived from the security parameter") {
  const ExperimentSpec a = parse_experiment("security_parameter = 50\nrounds_per_kappa = 20\nreward_values = 1,2,4");
  CHECK(a.config.rounds == 1000);
  CHECK(a.config.reward_schedule == std::vector<RewardEpoch>{{1, 1}, {51, 2}, {101, 4}});
  const ExperimentSpec b = parse_experiment("security_parameter = 30");
  CHECK(b.config.rounds == 30);
  const ExperimentSpec c = parse_experiment("reward_values = 1,3\nreward_epoch_rounds = 7\nrounds = 20");
  CHECK(c.config.reward_schedule == std::vector<RewardEpoch>{{1, 1}, {8, 3}});
}

TEST_CASE("configuration errors are reported") {
  CHECK(config_error("colour = red").find("unknown key 'colour'") != std::string::npos);
  CHECK(config_error("n = 4\nn = 5").find("more than once") != std::string::npos);
  CHECK(config_error("n = 4\ncoalition_size = 4").find("1 <= t' <= n-1") != std::string::npos);
  CHECK(config_error("p = 0.6\np_fruit = 0.5\nprotocol = fruitchain").find("p + p_fruit") != std::string::npos);
  CHECK_FALSE(config_error("p = abc").empty());
  CHECK_FALSE(config_error("reward_schedule = 2:1").empty());
  CHECK_FALSE(config_error("rounds = 0").empty());
  CHECK_FALSE(config_error("trials = 0").empty());
  CHECK_FALSE(config_error("strategy = withholder\nwithheld_queries = 11").empty());
  CHECK_FALSE(config_error("sweep = colour=1,2").empty());
  CHECK_FALSE(config_error("reward = 1\nreward_schedule = 1:1").empty());
  CHECK_FALSE(config_error("just words").empty());
}

TEST_CASE("echo round-trips exactly") {
  const std::vector<std::string> inputs{
      "",
      "n = 7\ncoalition_size = 3\np = 0.30000000000000004\ncost_per_query = 1e-7\nseed = 18446744073709551615",
      "protocol = fruitchain\np_fruit = 0.01\nfruit_recency_window = 40\nstrategy = selfish\nutility = relative\n"
      "sampling = sequential\nreward_schedule = 1:1,11:2.25",
      "strategy = withholder\nwithheld_queries = 1,2,3\nbound = bitcoin_profit\ndelta1 = 0.1\nphi = 0.5\n"
      "cost_per_query = 4e-5\ntrials = 7\nsweep = coalition_size=1,2; p=1e-4,2e-4",
  };
  for (const std::string& in : inputs) {
    const ExperimentSpec a = parse_experiment(in);
    const std::string echo = echo_experiment(a);
    const ExperimentSpec b = parse_experiment(echo);
    CHECK(b.config == a.config);
    CHECK(b.strategy == a.strategy);
    CHECK(b.utility == a.utility);
    CHECK(b.bound == a.bound);
    CHECK(b.trials == a.trials);
    CHECK(echo_experiment(b) == echo);
  }
}

TEST_CASE("re-ingested echo reproduces the run") {
  const ExperimentSpec a = parse_experiment("n = 5\ncoalition_size = 2\np = 0.01\nrounds = 500\nstrategy = selfish");
  const ExperimentSpec b = parse_experiment(echo_experiment(a));
  const ExecutionTrace ta = run_execution(a.config, a.strategy, a.config.seed);
  const ExecutionTrace tb = run_execution(b.config, b.strategy, b.config.seed);
  CHECK(trace_summary_json(ta).dump() == trace_summary_json(tb).dump());
}

TEST_CASE("epsilons from a named bound") {
  const ExperimentSpec s = parse_experiment("bound = 1\ndelta1 = 0.1");
  const auto [eps, eps_prime] = resolve_epsilons(s);
  CHECK(eps == doctest::Approx(0.414));
  CHECK(eps_prime == 0.0);
  const ExperimentSpec literal = parse_experiment("epsilon = 0.2\nepsilon_prime = 0.03");
  CHECK(resolve_epsilons(literal) == std::pair<double, double>{0.2, 0.03});
  const ExperimentSpec bad = parse_experiment("bound = 1\ndelta1 = 0.3");
  CHECK_THROWS_AS(resolve_epsilons(bad), SideConditionError);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-4) == "1e-04");
  CHECK(format_double17(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("csv columns are fixed") {
  SimulationConfig c;
  c.rounds = 1000;
  c.p = 1e-3;
  const EvpVerdict v = estimate_evp(c, AdversaryStrategy::selfish(), UtilityKind::relative, 0, 0, 3, 1);
  const std::string csv = verdict_csv(v);
  CHECK(csv.rfind("trial,seed_H,seed_A,U_min_H,U_max_A,violated,U_max_H,U_min_A\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  const std::string wide = verdict_csv(v, true);
  CHECK(wide.find(",U_H_0,") != std::string::npos);
  CHECK(wide.find(",U_A_6\n") != std::string::npos);
}

TEST_CASE("output header carries the tool and the resolved config") {
  const ExperimentSpec s = parse_experiment("n = 4\ncoalition_size = 1");
  const Json h = output_header(s);
  CHECK(h["tool"] == kToolName);
  CHECK(h["version"] == kToolVersion);
  CHECK(h["config"]["n"] == 4);
  CHECK(h["resolved_experiment"].get<std::string>() == echo_experiment(s));
}

TEST_CASE("file errors are IoError") {
  CHECK_THROWS_AS(read_file("/nonexistent/dir/x.cfg"), IoError);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/x.json", "{}"), IoError);
  CHECK_THROWS_AS(load_experiment("/nonexistent/dir/x.cfg"), IoError);
}
