#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evpsim/engine.hpp"

namespace evpsim {

enum class UtilityKind { absolute, absolute_minus_cost, relative, relative_minus_relative_cost };

std::string to_string(UtilityKind kind);
UtilityKind parse_utility_kind(const std::string& name);

struct RewardQuery {
  ParticipantSet subject;
  ParticipantId observer = kNoCreator;
};

/// Reward-bearing objects in one honest view, counted per (creator, reward epoch).
///
/// Bitcoin pays per block on the observer's chain; Fruitchain pays only per fruit referenced by
/// that chain. Set totals are formed from integer counts first, then weighted by epoch rewards.
class ViewRewards {
 public:
  ViewRewards(const ExecutionTrace& trace, ParticipantId observer);

  double of(const ParticipantSet& subject) const;
  double of(ParticipantId participant) const;
  double total() const;
  /// Number of reward-bearing objects created by `subject` in this view.
  std::int64_t count(const ParticipantSet& subject) const;

 private:
  std::vector<double> epoch_rewards_;
  std::vector<std::vector<std::int64_t>> counts_;  // [participant][epoch]
};

double rewards_in_view(const ExecutionTrace& trace, const RewardQuery& query);
double cost_of(const ExecutionTrace& trace, ParticipantId participant);
double cost_of(const ExecutionTrace& trace, const ParticipantSet& participants);

double utility(const ExecutionTrace& trace, UtilityKind kind, const ParticipantSet& coalition, ParticipantId observer);

struct UtilityReport {
  UtilityKind kind = UtilityKind::absolute;
  std::vector<ParticipantId> observers;  // honest participants, ascending
  std::vector<double> per_view;          // aligned with observers
  double min = 0.0;
  double max = 0.0;
};

/// Utility of `coalition` in every view outside it. Throws UsageError if nobody is left to observe.
UtilityReport u_min_max(const ExecutionTrace& trace, UtilityKind kind, const ParticipantSet& coalition);

}  // namespace evpsim
