#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "evpsim/accounting.hpp"
#include "evpsim/adversaries.hpp"
#include "evpsim/config.hpp"
#include "evpsim/oracle.hpp"

namespace evpsim {

inline constexpr std::uint64_t kDefaultOutcomeLimit = std::uint64_t{1} << 20;

struct ExactDistribution {
  std::uint64_t outcomes = 0;  // sequences with nonzero probability that were enumerated
  std::int64_t draws = 0;      // queries per execution
  std::vector<ParticipantId> observers;
  std::vector<double> expected_per_view;
  double expected_min = 0.0;
  double expected_max = 0.0;
  std::map<double, double> min_distribution;  // value -> probability
  std::map<double, double> max_distribution;
  double total_probability = 0.0;
};

/// Number of outcome sequences the enumeration would visit (may exceed 2^64, hence long double).
long double exact_outcome_count(const SimulationConfig& config, const AdversaryStrategy& strategy);

/// Enumerates every sequence of query outcomes with its probability, replays each through the
/// engine and aggregates exact expectations and distributions of U^min and U^max.
ExactDistribution brute_force_oracle(const SimulationConfig& config, const AdversaryStrategy& strategy,
                                     UtilityKind kind, std::uint64_t max_outcomes = kDefaultOutcomeLimit);

}  // namespace evpsim
