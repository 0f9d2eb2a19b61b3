#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "evpsim/config.hpp"
#include "evpsim/diffuse.hpp"
#include "evpsim/ledger.hpp"
#include "evpsim/oracle.hpp"
#include "evpsim/view.hpp"

namespace evpsim {

enum class StrategyKind { h_t_front_runner, selfish_miner, fixed_cost_withholder, non_participant };

std::string to_string(StrategyKind kind);
StrategyKind parse_strategy_kind(const std::string& name);

/// A static coalition strategy. The per-member query budget is fixed before the first round.
struct AdversaryStrategy {
  StrategyKind kind = StrategyKind::h_t_front_runner;
  // Withholder only: x_m per member. Empty means use the config's withheld_queries.
  std::vector<int> withheld;

  static AdversaryStrategy front_runner() { return {StrategyKind::h_t_front_runner, {}}; }
  static AdversaryStrategy selfish() { return {StrategyKind::selfish_miner, {}}; }
  static AdversaryStrategy withholder(std::vector<int> x = {}) {
    return {StrategyKind::fixed_cost_withholder, std::move(x)};
  }
  static AdversaryStrategy non_participant() { return {StrategyKind::non_participant, {}}; }

  /// x_m actually withheld by each member under this strategy.
  std::vector<int> committed_withheld(const SimulationConfig& config) const;
  /// q - x_m per member.
  std::vector<int> committed_budgets(const SimulationConfig& config) const;

  friend bool operator==(const AdversaryStrategy&, const AdversaryStrategy&) = default;
};

/// The coalition's access to the oracle. Every round each member may ask at most its committed
/// budget; whatever is left unasked at round end is still drawn and discarded, so the spend is
/// exactly the commitment.
class CoalitionOracle {
 public:
  CoalitionOracle(RandomOracle& oracle, std::vector<int> budgets);

  void begin_round();
  QueryTally ask(int member, int count);
  void finish_round();

  int members() const { return static_cast<int>(budgets_.size()); }
  int budget(int member) const { return budgets_.at(static_cast<std::size_t>(member)); }
  int remaining(int member) const;
  int blocks_this_round() const { return blocks_this_round_; }
  int fruits_this_round() const { return fruits_this_round_; }
  std::int64_t queries_this_round() const { return queries_this_round_; }
  const std::vector<std::int64_t>& total_queries() const { return total_queries_; }

 private:
  RandomOracle& oracle_;
  std::vector<int> budgets_;
  std::vector<int> used_;
  std::vector<std::int64_t> total_queries_;
  int blocks_this_round_ = 0;
  int fruits_this_round_ = 0;
  std::int64_t queries_this_round_ = 0;
};

struct AdversaryContext {
  Round round;
  const SimulationConfig& config;
  Ledger& ledger;
  CoalitionOracle& oracle;
  // Honest output of the current round; the adversary sees it before anything is delivered.
  const std::vector<Message>& honest_messages;
  DiffuseBuffer& network;
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual StrategyKind kind() const = 0;
  virtual void play_round(AdversaryContext& ctx) = 0;
  /// Receives the round's full delivery stream (adversary messages first).
  virtual void end_round(std::span<const Message> deliveries, const Ledger& ledger, Round round) = 0;
  /// The chain the coalition regards as its own.
  virtual const ViewState& view() const = 0;
  /// Coalition blocks never shown to anyone.
  virtual std::int64_t unpublished_blocks() const { return 0; }
};

/// Protocol-following members sharing one view; their messages always go out first. With
/// reduced budgets this is the fixed-cost withholder; with zero budget the non-participant.
class HonestCoalition final : public Adversary {
 public:
  explicit HonestCoalition(StrategyKind kind) : kind_(kind), view_(0) {}
  StrategyKind kind() const override { return kind_; }
  void play_round(AdversaryContext& ctx) override;
  void end_round(std::span<const Message> deliveries, const Ledger& ledger, Round round) override;
  const ViewState& view() const override { return view_; }

 private:
  StrategyKind kind_;
  ViewState view_;
};

struct SelfishMinerState {
  std::vector<BlockId> private_chain;  // genesis first
  std::int64_t public_tip_height = 0;
  std::vector<BlockId> unrevealed;     // contiguous suffix of private_chain
};

/// Members pool their queries on one private chain. A private block is revealed only when the
/// honest side announces a block at the same height; adversary-first delivery then makes the
/// honest participants take the private block. If the private chain falls strictly behind, it
/// is abandoned for the public one.
class SelfishMiner final : public Adversary {
 public:
  SelfishMiner() : private_(0), public_(0) {}
  StrategyKind kind() const override { return StrategyKind::selfish_miner; }
  void play_round(AdversaryContext& ctx) override;
  void end_round(std::span<const Message> deliveries, const Ledger& ledger, Round round) override;
  const ViewState& view() const override { return private_; }
  std::int64_t unpublished_blocks() const override { return static_cast<std::int64_t>(unrevealed_.size()); }

  SelfishMinerState state(const Ledger& ledger) const;
  std::int64_t blocks_revealed() const { return revealed_; }

 private:
  ViewState private_;
  ViewState public_;
  std::deque<BlockId> unrevealed_;
  std::int64_t revealed_ = 0;
};

std::unique_ptr<Adversary> make_adversary(const AdversaryStrategy& strategy, const SimulationConfig& config);

}  // namespace evpsim
