#include <doctest.h>

#include <cmath>

#include "evpsim/accounting.hpp"
#include "evpsim/engine.hpp"

using namespace evpsim;

namespace {

using O = QueryOutcome;

SimulationConfig duel() {
  SimulationConfig c;
  c.n = 2;
  c.coalition_size = 1;
  c.queries_per_round = 1;
  c.p = 0.5;
  return c;
}

// Script for the two-party duel: honest participant 1 queries first, the coalition second.
std::vector<O> duel_script(const std::vector<std::pair<O, O>>& rounds) {
  std::vector<O> s;
  for (auto [honest, coalition] : rounds) {
    s.push_back(honest);
    s.push_back(coalition);
  }
  return s;
}

ExecutionTrace scripted_run(SimulationConfig c, const AdversaryStrategy& s, const std::vector<O>& script) {
  c.rounds = static_cast<Round>(script.size() / static_cast<std::size_t>(queries_per_round_total(c, s)));
  RunOptions opts;
  opts.script = script;
  opts.record_rounds = true;
  return run_execution(c, s, 0, opts);
}

std::int64_t coalition_blocks_on_chain(const ExecutionTrace& t, const LocalView& v) {
  return t.ledger.block(v.tip()).coalition_blocks_on_path;
}

}  // namespace

TEST_CASE("strategy names round-trip") {
  for (auto k : {StrategyKind::h_t_front_runner, StrategyKind::selfish_miner, StrategyKind::fixed_cost_withholder,
                 StrategyKind::non_participant})
    CHECK(parse_strategy_kind(to_string(k)) == k);
  CHECK(parse_strategy_kind("selfish") == StrategyKind::selfish_miner);
  CHECK_THROWS_AS(parse_strategy_kind("bribery"), ConfigError);
}

TEST_CASE("coalition oracle enforces and burns the budget") {
  RandomOracle o(0.5, 0.0, SamplingMode::sequential, 3, 4);
  CoalitionOracle co(o, {3, 1});
  co.begin_round();
  co.ask(0, 2);
  CHECK(co.remaining(0) == 1);
  CHECK_THROWS_AS(co.ask(1, 2), UsageError);
  co.finish_round();
  CHECK(o.queries_answered() == 4);
  CHECK(co.queries_this_round() == 4);
  CHECK(co.total_queries() == std::vector<std::int64_t>{3, 1});
}

TEST_CASE("front runner without success sends nothing") {
  SimulationConfig c = duel();
  c.p = 0.0;
  c.rounds = 50;
  RunOptions opts;
  opts.record_rounds = true;
  const ExecutionTrace t = run_execution(c, AdversaryStrategy::front_runner(), 1, opts);
  for (const RoundRecord& r : t.per_round) CHECK(r.messages_delivered == 0);
}

TEST_CASE("front runner wins a simultaneous find") {
  const ExecutionTrace t = scripted_run(duel(), AdversaryStrategy::front_runner(), duel_script({{O::block, O::block}}));
  const LocalView& v = t.view_of(1);
  CHECK(v.length() == 1);
  CHECK(t.ledger.block(v.tip()).creator == 0);
}

TEST_CASE("front runner takes every slot when everybody always succeeds") {
  SimulationConfig c = duel();
  c.p = 1.0;
  c.rounds = 10;
  const ExecutionTrace t = run_execution(c, AdversaryStrategy::front_runner(), 5);
  const LocalView& v = t.view_of(1);
  CHECK(v.length() == 10);
  for (std::size_t k = 1; k < v.chain.size(); ++k) CHECK(t.ledger.block(v.chain[k]).creator == 0);
}

TEST_CASE("selfish miner with lead three reveals one block") {
  const auto script =
      duel_script({{O::none, O::block}, {O::none, O::block}, {O::none, O::block}, {O::block, O::none}});
  const ExecutionTrace t = scripted_run(duel(), AdversaryStrategy::selfish(), script);
  const LocalView& v = t.view_of(1);
  CHECK(v.length() == 1);
  CHECK(t.ledger.block(v.tip()).creator == 0);
  CHECK(t.adversary_view.length() == 3);
  CHECK(t.adversary_view.length() - v.length() == 2);
  CHECK(t.unpublished_coalition_blocks == 2);
}

TEST_CASE("selfish miner with nothing private adopts the honest block") {
  const ExecutionTrace t = scripted_run(duel(), AdversaryStrategy::selfish(), duel_script({{O::block, O::none}}));
  const LocalView& v = t.view_of(1);
  CHECK(v.length() == 1);
  CHECK(t.ledger.block(v.tip()).creator == 1);
  CHECK(t.adversary_view.tip() == v.tip());
  CHECK(t.unpublished_coalition_blocks == 0);
}

TEST_CASE("selfish miner keeps its chain on an equal-length tie") {
  // Round 1 both find; the private block is revealed and wins. Round 2 the coalition builds
  // privately; round 3 honest catches up and the private block at that height is revealed.
  const auto script = duel_script({{O::block, O::block}, {O::none, O::block}, {O::block, O::none}});
  const ExecutionTrace t = scripted_run(duel(), AdversaryStrategy::selfish(), script);
  const LocalView& v = t.view_of(1);
  CHECK(v.length() == 2);
  CHECK(coalition_blocks_on_chain(t, v) == 2);
  CHECK(t.adversary_view.tip() == v.tip());
}

TEST_CASE("selfish miner abandons a private chain that falls behind") {
  // The coalition's single private block is revealed against the first honest block; the
  // second honest block then builds on it.
  const auto script = duel_script({{O::none, O::block}, {O::block, O::none}, {O::block, O::none}});
  const ExecutionTrace t = scripted_run(duel(), AdversaryStrategy::selfish(), script);
  const LocalView& v = t.view_of(1);
  CHECK(v.length() == 2);
  CHECK(coalition_blocks_on_chain(t, v) == 1);
  CHECK(t.adversary_view.tip() == v.tip());
}

TEST_CASE("selfish miner reaches its long-run share of the honest chain") {
  SimulationConfig c;  // n=10, t'=3, q=10, p=1e-4
  c.rounds = 2'000'000;
  const ExecutionTrace t = run_execution(c, AdversaryStrategy::selfish(), 17);
  for (const LocalView& v : t.final_views) {
    const double share = double(coalition_blocks_on_chain(t, v)) / double(v.length());
    CHECK(share >= 3.0 / 7.0 * (1 - 0.05));
    CHECK(coalition_blocks_on_chain(t, v) + t.unpublished_coalition_blocks <= t.coalition_blocks_found);
  }
}

TEST_CASE("selfish blocks in honest chains never exceed blocks produced") {
  SimulationConfig c;
  c.n = 6;
  c.coalition_size = 2;
  c.queries_per_round = 3;
  c.p = 0.02;
  c.rounds = 2000;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const ExecutionTrace t = run_execution(c, AdversaryStrategy::selfish(), seed);
    for (const LocalView& v : t.final_views) CHECK(coalition_blocks_on_chain(t, v) <= t.coalition_blocks_found);
  }
}

TEST_CASE("withholding everything equals not participating") {
  SimulationConfig c;
  c.n = 5;
  c.coalition_size = 2;
  c.queries_per_round = 4;
  c.p = 0.01;
  c.rounds = 3000;
  const ExecutionTrace a = run_execution(c, AdversaryStrategy::withholder({4, 4}), 21);
  const ExecutionTrace b = run_execution(c, AdversaryStrategy::non_participant(), 21);
  for (std::size_t k = 0; k < a.final_views.size(); ++k) CHECK(a.final_views[k].chain == b.final_views[k].chain);
  CHECK(a.query_counts == b.query_counts);
}

TEST_CASE("withholding nothing equals the front runner") {
  SimulationConfig c;
  c.n = 5;
  c.coalition_size = 2;
  c.queries_per_round = 4;
  c.p = 0.01;
  c.rounds = 3000;
  const ExecutionTrace a = run_execution(c, AdversaryStrategy::withholder({0, 0}), 22);
  const ExecutionTrace b = run_execution(c, AdversaryStrategy::front_runner(), 22);
  for (std::size_t k = 0; k < a.final_views.size(); ++k) CHECK(a.final_views[k].chain == b.final_views[k].chain);
}

TEST_CASE("withholder block production follows the reduced budget") {
  SimulationConfig c;
  c.n = 4;
  c.coalition_size = 2;
  c.queries_per_round = 10;
  c.p = 1e-3;
  c.rounds = 100'000;
  const ExecutionTrace t = run_execution(c, AdversaryStrategy::withholder({5, 5}), 23);
  CHECK(std::abs(double(t.coalition_blocks_found) - 1000.0) <= 5 * std::sqrt(1000.0));
  CHECK(t.query_counts[0] == 5 * c.rounds);
}

TEST_CASE("withholder commitment is validated") {
  SimulationConfig c;
  c.coalition_size = 2;
  CHECK_THROWS_AS(AdversaryStrategy::withholder({11, 0}).committed_budgets(c), ConfigError);
  CHECK_THROWS_AS(AdversaryStrategy::withholder({1, 2, 3}).committed_budgets(c), ConfigError);
  CHECK(AdversaryStrategy::withholder({4}).committed_budgets(c) == std::vector<int>{6, 6});
}

TEST_CASE("non participant has no cost and no reward") {
  SimulationConfig c;
  c.n = 5;
  c.coalition_size = 2;
  c.p = 0.01;
  c.cost_per_query = 0.01;
  c.rounds = 1000;
  const ExecutionTrace t = run_execution(c, AdversaryStrategy::non_participant(), 2);
  for (int m = 0; m < 2; ++m) CHECK(cost_of(t, m) == 0.0);
  for (auto kind : {UtilityKind::absolute, UtilityKind::absolute_minus_cost}) {
    const UtilityReport u = u_min_max(t, kind, c.coalition());
    for (double x : u.per_view) CHECK(x == 0.0);
  }
}
