#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "evpsim/types.hpp"

namespace evpsim {

/// Reward per block (Bitcoin) or per fruit (Fruitchain) from `start_round` on.
struct RewardEpoch {
  Round start_round = 1;
  double reward = 1.0;

  friend bool operator==(const RewardEpoch&, const RewardEpoch&) = default;
};

/// Index of the epoch containing `round`: the last epoch starting at or before it.
std::size_t epoch_index(const std::vector<RewardEpoch>& schedule, Round round);

/// Parameters of one family of executions. The coalition is participants 0..coalition_size-1.
struct SimulationConfig {
  int n = 10;
  int coalition_size = 3;
  int queries_per_round = 10;
  double p = 1e-4;
  double p_fruit = 0.0;
  double cost_per_query = 0.0;
  std::vector<RewardEpoch> reward_schedule{RewardEpoch{}};
  Round rounds = 10000;
  ProtocolKind protocol = ProtocolKind::bitcoin_fixed_target;
  // Per coalition member; empty means zero for everyone.
  std::vector<int> withheld_queries;
  std::int64_t security_parameter = 0;
  std::uint64_t seed = 1;
  // Unset means the whole execution (no fruit ever expires).
  std::optional<Round> fruit_recency_window;
  SamplingMode sampling = SamplingMode::binomial;

  /// Throws ConfigError naming the first rule that fails.
  void validate() const;

  ParticipantSet coalition() const { return ParticipantSet::range(n, 0, coalition_size); }
  ParticipantSet honest() const { return ParticipantSet::range(n, coalition_size, n); }
  bool in_coalition(ParticipantId i) const { return i >= 0 && i < coalition_size; }
  int withheld(int member) const;
  Round recency_window() const { return fruit_recency_window.value_or(rounds); }
  std::size_t epoch_of(Round round) const { return epoch_index(reward_schedule, round); }
  double reward_of_epoch(std::size_t epoch) const { return reward_schedule.at(epoch).reward; }

  friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

}  // namespace evpsim
