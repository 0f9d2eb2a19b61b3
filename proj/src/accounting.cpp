#include "evpsim/accounting.hpp"

#include <algorithm>

namespace evpsim {

std::string to_string(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::absolute: return "absolute";
    case UtilityKind::absolute_minus_cost: return "absolute_minus_cost";
    case UtilityKind::relative: return "relative";
    case UtilityKind::relative_minus_relative_cost: return "relative_minus_relative_cost";
  }
  return "?";
}

UtilityKind parse_utility_kind(const std::string& name) {
  if (name == "absolute") return UtilityKind::absolute;
  if (name == "absolute_minus_cost") return UtilityKind::absolute_minus_cost;
  if (name == "relative") return UtilityKind::relative;
  if (name == "relative_minus_relative_cost") return UtilityKind::relative_minus_relative_cost;
  throw ConfigError("unknown utility '" + name +
                    "' (expected absolute, absolute_minus_cost, relative, relative_minus_relative_cost)");
}

ViewRewards::ViewRewards(const ExecutionTrace& trace, ParticipantId observer) {
  const LocalView& view = trace.view_of(observer);
  const auto& schedule = trace.config.reward_schedule;
  epoch_rewards_.reserve(schedule.size());
  for (const auto& e : schedule) epoch_rewards_.push_back(e.reward);
  counts_.assign(static_cast<std::size_t>(trace.config.n), std::vector<std::int64_t>(schedule.size(), 0));

  if (trace.config.protocol == ProtocolKind::fruitchain) {
    for (FruitId f : view.included_fruits) {
      const Fruit& fr = trace.ledger.fruit(f);
      ++counts_[static_cast<std::size_t>(fr.creator)][fr.reward_epoch];
    }
  } else {
    for (BlockId b : view.chain) {
      if (b == kGenesis) continue;
      const Block& blk = trace.ledger.block(b);
      ++counts_[static_cast<std::size_t>(blk.creator)][blk.reward_epoch];
    }
  }
}

double ViewRewards::of(const ParticipantSet& subject) const {
  std::vector<std::int64_t> per_epoch(epoch_rewards_.size(), 0);
  for (ParticipantId i : subject.members())
    for (std::size_t e = 0; e < per_epoch.size(); ++e) per_epoch[e] += counts_.at(static_cast<std::size_t>(i))[e];
  double r = 0.0;
  for (std::size_t e = 0; e < per_epoch.size(); ++e) r += static_cast<double>(per_epoch[e]) * epoch_rewards_[e];
  return r;
}

double ViewRewards::of(ParticipantId participant) const {
  return of(ParticipantSet::of(static_cast<int>(counts_.size()), {participant}));
}

double ViewRewards::total() const { return of(ParticipantSet::all(static_cast<int>(counts_.size()))); }

std::int64_t ViewRewards::count(const ParticipantSet& subject) const {
  std::int64_t c = 0;
  for (ParticipantId i : subject.members())
    for (std::int64_t v : counts_.at(static_cast<std::size_t>(i))) c += v;
  return c;
}

double rewards_in_view(const ExecutionTrace& trace, const RewardQuery& query) {
  return ViewRewards(trace, query.observer).of(query.subject);
}

double cost_of(const ExecutionTrace& trace, ParticipantId participant) {
  return trace.config.cost_per_query * static_cast<double>(trace.query_counts.at(static_cast<std::size_t>(participant)));
}

double cost_of(const ExecutionTrace& trace, const ParticipantSet& participants) {
  std::int64_t queries = 0;
  for (ParticipantId i : participants.members()) queries += trace.query_counts.at(static_cast<std::size_t>(i));
  return trace.config.cost_per_query * static_cast<double>(queries);
}

namespace {

double utility_from(const ViewRewards& rewards, const ExecutionTrace& trace, UtilityKind kind,
                    const ParticipantSet& coalition) {
  const double r_t = rewards.of(coalition);
  switch (kind) {
    case UtilityKind::absolute: return r_t;
    case UtilityKind::absolute_minus_cost: return r_t - cost_of(trace, coalition);
    case UtilityKind::relative: {
      const double r_s = rewards.total();
      return r_s != 0.0 ? r_t / r_s : 0.0;
    }
    case UtilityKind::relative_minus_relative_cost: {
      const double r_s = rewards.total();
      const double c_s = cost_of(trace, ParticipantSet::all(trace.config.n));
      if (r_s == 0.0 || c_s == 0.0) return 0.0;
      return r_t / r_s - cost_of(trace, coalition) / c_s;
    }
  }
  return 0.0;
}

}  // namespace

double utility(const ExecutionTrace& trace, UtilityKind kind, const ParticipantSet& coalition, ParticipantId observer) {
  return utility_from(ViewRewards(trace, observer), trace, kind, coalition);
}

UtilityReport u_min_max(const ExecutionTrace& trace, UtilityKind kind, const ParticipantSet& coalition) {
  UtilityReport rep;
  rep.kind = kind;
  for (ParticipantId j = 0; j < trace.config.n; ++j) {
    if (coalition.contains(j)) continue;
    if (!trace.is_honest(j)) throw UsageError("only honest participants can observe");
    rep.observers.push_back(j);
    rep.per_view.push_back(utility(trace, kind, coalition, j));
  }
  if (rep.observers.empty()) throw UsageError("the coalition leaves no honest local chain to observe");
  const auto [lo, hi] = std::minmax_element(rep.per_view.begin(), rep.per_view.end());
  rep.min = *lo;
  rep.max = *hi;
  return rep;
}

}  // namespace evpsim
