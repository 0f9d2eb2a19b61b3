#include "evpsim/config.hpp"

#include <cmath>
#include <string>

namespace evpsim {

void SimulationConfig::validate() const {
  if (n < 2) throw ConfigError("n must be at least 2");
  if (coalition_size < 1 || coalition_size > n - 1)
    throw ConfigError("coalition_size must satisfy 1 <= t' <= n-1 (got t'=" + std::to_string(coalition_size) +
                      ", n=" + std::to_string(n) + ")");
  if (queries_per_round < 0) throw ConfigError("queries_per_round must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0,1]");
  if (!(p_fruit >= 0.0 && p_fruit <= 1.0)) throw ConfigError("p_fruit must lie in [0,1]");
  if (p + p_fruit > 1.0) throw ConfigError("p + p_fruit must be <= 1");
  if (protocol == ProtocolKind::bitcoin_fixed_target && p_fruit != 0.0)
    throw ConfigError("p_fruit must be 0 for the bitcoin protocol");
  if (!std::isfinite(cost_per_query) || cost_per_query < 0.0) throw ConfigError("cost_per_query must be >= 0");
  if (rounds < 1) throw ConfigError("rounds must be >= 1");
  if (reward_schedule.empty()) throw ConfigError("reward_schedule must have at least one epoch");
  if (reward_schedule.front().start_round != 1) throw ConfigError("reward_schedule must start at round 1");
  for (std::size_t e = 0; e < reward_schedule.size(); ++e) {
    if (!std::isfinite(reward_schedule[e].reward) || reward_schedule[e].reward < 0.0)
      throw ConfigError("reward_schedule rewards must be finite and >= 0");
    if (e > 0 && reward_schedule[e].start_round <= reward_schedule[e - 1].start_round)
      throw ConfigError("reward_schedule epochs must each span at least one round");
  }
  if (!withheld_queries.empty() && static_cast<int>(withheld_queries.size()) != coalition_size)
    throw ConfigError("withheld_queries must list one value per coalition member");
  for (int x : withheld_queries)
    if (x < 0 || x > queries_per_round) throw ConfigError("withheld_queries entries must satisfy 0 <= x_m <= q");
  if (security_parameter < 0) throw ConfigError("security_parameter must be >= 0");
  if (fruit_recency_window && *fruit_recency_window < 0) throw ConfigError("fruit_recency_window must be >= 0");
}

int SimulationConfig::withheld(int member) const {
  if (withheld_queries.empty()) return 0;
  return withheld_queries.at(static_cast<std::size_t>(member));
}

std::size_t epoch_index(const std::vector<RewardEpoch>& schedule, Round round) {
  std::size_t e = 0;
  while (e + 1 < schedule.size() && schedule[e + 1].start_round <= round) ++e;
  return e;
}

}  // namespace evpsim
