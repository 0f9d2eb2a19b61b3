#include "evpsim/adversaries.hpp"

#include <algorithm>

#include "evpsim/protocols.hpp"

namespace evpsim {

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::h_t_front_runner: return "h_t";
    case StrategyKind::selfish_miner: return "selfish";
    case StrategyKind::fixed_cost_withholder: return "withholder";
    case StrategyKind::non_participant: return "non_participant";
  }
  return "?";
}

StrategyKind parse_strategy_kind(const std::string& name) {
  if (name == "h_t" || name == "h_t_front_runner") return StrategyKind::h_t_front_runner;
  if (name == "selfish" || name == "selfish_miner") return StrategyKind::selfish_miner;
  if (name == "withholder" || name == "fixed_cost_withholder") return StrategyKind::fixed_cost_withholder;
  if (name == "non_participant") return StrategyKind::non_participant;
  throw ConfigError("unknown strategy '" + name + "' (expected h_t, selfish, withholder, non_participant)");
}

std::vector<int> AdversaryStrategy::committed_withheld(const SimulationConfig& config) const {
  const auto t = static_cast<std::size_t>(config.coalition_size);
  switch (kind) {
    case StrategyKind::h_t_front_runner:
    case StrategyKind::selfish_miner: return std::vector<int>(t, 0);
    case StrategyKind::non_participant: return std::vector<int>(t, config.queries_per_round);
    case StrategyKind::fixed_cost_withholder: break;
  }
  std::vector<int> x = withheld.empty() ? config.withheld_queries : withheld;
  if (x.empty()) x.assign(t, 0);
  if (x.size() == 1 && t > 1) x.assign(t, x.front());
  if (x.size() != t) throw ConfigError("withholder needs one withheld count per coalition member");
  for (int v : x)
    if (v < 0 || v > config.queries_per_round) throw ConfigError("withheld counts must satisfy 0 <= x_m <= q");
  return x;
}

std::vector<int> AdversaryStrategy::committed_budgets(const SimulationConfig& config) const {
  std::vector<int> b = committed_withheld(config);
  for (int& v : b) v = config.queries_per_round - v;
  return b;
}

CoalitionOracle::CoalitionOracle(RandomOracle& oracle, std::vector<int> budgets)
    : oracle_(oracle),
      budgets_(std::move(budgets)),
      used_(budgets_.size(), 0),
      total_queries_(budgets_.size(), 0) {}

void CoalitionOracle::begin_round() {
  std::fill(used_.begin(), used_.end(), 0);
  blocks_this_round_ = 0;
  fruits_this_round_ = 0;
  queries_this_round_ = 0;
}

int CoalitionOracle::remaining(int member) const {
  const auto m = static_cast<std::size_t>(member);
  return budgets_.at(m) - used_.at(m);
}

QueryTally CoalitionOracle::ask(int member, int count) {
  if (count < 0 || count > remaining(member)) throw UsageError("coalition member exceeded its committed budget");
  const auto m = static_cast<std::size_t>(member);
  used_[m] += count;
  total_queries_[m] += count;
  queries_this_round_ += count;
  const QueryTally t = oracle_.query_batch(count);
  blocks_this_round_ += t.blocks;
  fruits_this_round_ += t.fruits;
  return t;
}

void CoalitionOracle::finish_round() {
  for (int m = 0; m < members(); ++m) {
    const int left = remaining(m);
    if (left == 0) continue;
    // Paid for but unused: drawn and discarded, and not counted as found.
    const auto mi = static_cast<std::size_t>(m);
    used_[mi] += left;
    total_queries_[mi] += left;
    queries_this_round_ += left;
    oracle_.query_batch(left);
  }
}

std::unique_ptr<Adversary> make_adversary(const AdversaryStrategy& strategy, const SimulationConfig& config) {
  strategy.committed_withheld(config);  // validates the parameters
  if (strategy.kind == StrategyKind::selfish_miner) return std::make_unique<SelfishMiner>();
  return std::make_unique<HonestCoalition>(strategy.kind);
}

void HonestCoalition::play_round(AdversaryContext& ctx) {
  const bool fruitchain = ctx.config.protocol == ProtocolKind::fruitchain;
  for (int m = 0; m < ctx.oracle.members(); ++m) {
    const int budget = ctx.oracle.remaining(m);
    if (budget == 0) continue;
    const QueryTally tally = ctx.oracle.ask(m, budget);
    const HonestRoundResult res =
        fruitchain ? honest_round_fruitchain(view_, tally, ctx.ledger, m, ctx.round, ctx.config.recency_window())
                   : honest_round_bitcoin(view_, tally, ctx.ledger, m, ctx.round);
    if (res.block) ctx.network.send_adversarial({MessageKind::block, *res.block, m, true});
    for (FruitId f : res.fruits) ctx.network.send_adversarial({MessageKind::fruit, f, m, true});
  }
}

void HonestCoalition::end_round(std::span<const Message> deliveries, const Ledger& ledger, Round) {
  select_chain(view_, deliveries, ledger);
}

void SelfishMiner::play_round(AdversaryContext& ctx) {
  const bool fruitchain = ctx.config.protocol == ProtocolKind::fruitchain;
  const Round window = ctx.config.recency_window();

  for (int m = 0; m < ctx.oracle.members(); ++m) {
    const int budget = ctx.oracle.remaining(m);
    if (budget == 0) continue;
    const QueryTally tally = ctx.oracle.ask(m, budget);
    // Each block found this round extends the previous one.
    for (int k = 0; k < tally.blocks; ++k) {
      std::vector<FruitId> refs;
      if (fruitchain) refs = private_.pending_fruits(ctx.ledger, ctx.round, window);
      const BlockId b = ctx.ledger.add_block(m, private_.tip(), ctx.round, std::move(refs));
      private_.learn_block(b);
      private_.move_tip(b, ctx.ledger);
      unrevealed_.push_back(b);
    }
    for (int k = 0; k < tally.fruits; ++k) {
      const FruitId f = ctx.ledger.add_fruit(m, ctx.round);
      ctx.network.send_adversarial({MessageKind::fruit, f, m, true});
    }
  }

  bool honest_block = false;
  for (const Message& msg : ctx.honest_messages)
    if (msg.kind == MessageKind::block) honest_block = true;
  if (!honest_block) return;

  // Honest blocks this round sit at public height + 1. Show the private block at that height
  // (and anything unrevealed below it) so it reaches every honest participant first.
  const std::int64_t contested = public_.height() + 1;
  while (!unrevealed_.empty() && ctx.ledger.block(unrevealed_.front()).height <= contested) {
    const BlockId b = unrevealed_.front();
    unrevealed_.pop_front();
    ctx.network.send_adversarial({MessageKind::block, b, ctx.ledger.block(b).creator, true});
    ++revealed_;
  }
}

void SelfishMiner::end_round(std::span<const Message> deliveries, const Ledger& ledger, Round) {
  select_chain(public_, deliveries, ledger);
  const BlockId before = private_.tip();
  // Strictly longer public chains replace the private one; equal length keeps it.
  select_chain(private_, deliveries, ledger);
  if (private_.tip() != before) unrevealed_.clear();
}

SelfishMinerState SelfishMiner::state(const Ledger& ledger) const {
  SelfishMinerState s;
  s.private_chain = ledger.chain_to(private_.tip());
  s.public_tip_height = public_.height();
  s.unrevealed.assign(unrevealed_.begin(), unrevealed_.end());
  return s;
}

}  // namespace evpsim
