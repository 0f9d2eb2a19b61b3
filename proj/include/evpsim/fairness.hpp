#pragma once

#include <cstdint>
#include <vector>

#include "evpsim/adversaries.hpp"
#include "evpsim/config.hpp"

namespace evpsim {

struct SubsetFairness {
  std::vector<ParticipantId> members;
  std::size_t holds = 0;  // trials in which every honest view gave this subset its share
  double rate = 0.0;
};

struct FairnessTrial {
  std::size_t trial = 0;
  std::uint64_t seed_protocol = 0;
  std::uint64_t seed_deviating = 0;
  bool condition1 = false;
  bool condition2 = false;
  bool in_share_band = false;
  double honest_cost_share = 0.0;      // honest share of queries in the protocol execution
  double min_honest_share = 0.0;       // min over views of R_{S\T}/R_S, deviating execution
  double min_coalition_share = 0.0;    // min over views of R_T/R_S, deviating execution
  double max_coalition_share = 0.0;
};

struct FairnessReport {
  double delta = 0.0;
  std::size_t trials = 0;
  double condition1_rate = 0.0;
  double condition2_rate = 0.0;
  double share_band_rate = 0.0;
  std::vector<SubsetFairness> subsets;
  std::vector<FairnessTrial> rows;
};

/// Subsets of all participants tested by the second condition: every nonempty subset when
/// n <= 12, otherwise `budget` random nonempty subsets plus all singletons.
std::vector<ParticipantSet> fairness_subsets(int n, std::size_t budget, std::uint64_t seed);

/// Measures both weak-fairness conditions over paired trials.
///
/// Condition 1 (deviating execution): every honest view credits the honest participants with at
/// least (1-delta) times their cost share, taken from the protocol execution.
/// Condition 2 (protocol execution): every tested subset gets at least (1-delta) times its cost
/// share in every honest view. Cost shares are query shares, which equal cost shares for any
/// positive per-query cost and stay defined when the cost is zero.
/// The share band records whether the coalition's relative reward in every honest view of the
/// deviating execution lies within (1 +/- delta) of its cost share.
FairnessReport weak_fairness_check(const SimulationConfig& config, const AdversaryStrategy& strategy, double delta,
                                   std::size_t trials, std::size_t subset_budget, std::uint64_t master_seed,
                                   unsigned workers = 1);

}  // namespace evpsim
