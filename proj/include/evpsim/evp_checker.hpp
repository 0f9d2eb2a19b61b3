#pragma once

#include <cstdint>
#include <vector>

#include "evpsim/accounting.hpp"
#include "evpsim/adversaries.hpp"
#include "evpsim/config.hpp"
#include "evpsim/stats.hpp"

namespace evpsim {

/// The equilibrium inequality fails when the deviation's best view beats the protocol's worst
/// view by more than eps * |worst| + eps_prime.
inline bool evp_violated(double u_max_deviating, double u_min_protocol, double eps, double eps_prime) {
  const double abs_min = u_min_protocol < 0 ? -u_min_protocol : u_min_protocol;
  return u_max_deviating > u_min_protocol + eps * abs_min + eps_prime;
}

struct EvpTrial {
  std::size_t trial = 0;
  std::uint64_t seed_protocol = 0;   // H_T execution
  std::uint64_t seed_deviating = 0;  // execution under the tested strategy
  double u_min_protocol = 0.0;
  double u_max_protocol = 0.0;
  double u_min_deviating = 0.0;
  double u_max_deviating = 0.0;
  bool violated = false;
  std::int64_t coalition_successes_protocol = 0;
  std::int64_t coalition_successes_deviating = 0;
  std::vector<double> per_view_protocol;
  std::vector<double> per_view_deviating;
};

struct EvpVerdict {
  UtilityKind kind = UtilityKind::absolute;
  AdversaryStrategy strategy;
  double epsilon = 0.0;
  double epsilon_prime = 0.0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double violation_rate = 0.0;
  ConfidenceInterval confidence_interval;
  double mean_u_max_deviating = 0.0;
  double mean_u_min_protocol = 0.0;
  double mean_u_min_deviating = 0.0;
  double mean_u_max_protocol = 0.0;
  std::vector<EvpTrial> rows;
};

/// Paired trials: one execution with the protocol-following coalition and one independent
/// execution with `strategy`, seeds derived from `master_seed` and the trial index.
EvpVerdict estimate_evp(const SimulationConfig& config, const AdversaryStrategy& strategy, UtilityKind kind,
                        double epsilon, double epsilon_prime, std::size_t trials, std::uint64_t master_seed,
                        unsigned workers = 1);

struct UtilityEstimate {
  std::vector<ParticipantId> observers;
  std::vector<RunningMoments> per_view;
  RunningMoments min;
  RunningMoments max;
};

/// Sample means of U^j, U^min and U^max over independent executions of `strategy`.
UtilityEstimate monte_carlo_utilities(const SimulationConfig& config, const AdversaryStrategy& strategy,
                                      UtilityKind kind, std::size_t trials, std::uint64_t master_seed,
                                      unsigned workers = 1);

}  // namespace evpsim
