#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "evpsim/accounting.hpp"
#include "evpsim/adversaries.hpp"
#include "evpsim/bounds.hpp"
#include "evpsim/config.hpp"
#include "evpsim/engine.hpp"
#include "evpsim/evp_checker.hpp"
#include "evpsim/exact_oracle.hpp"
#include "evpsim/fairness.hpp"

namespace evpsim {

inline constexpr const char* kToolName = "evpsim";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

/// Everything an experiment file describes. `entries` keeps the raw key/value pairs so sweeps
/// can re-resolve the file with one key overridden.
struct ExperimentSpec {
  SimulationConfig config;
  AdversaryStrategy strategy;
  UtilityKind utility = UtilityKind::absolute;
  double epsilon = 0.0;
  double epsilon_prime = 0.0;
  std::optional<BoundKind> bound;
  std::optional<double> delta1;
  std::optional<double> phi;
  std::optional<double> delta_prime;
  std::optional<double> delta_double_prime;
  std::optional<double> fairness_window;
  std::optional<double> min_epoch_rounds;
  double fairness_delta = 0.1;
  std::size_t trials = 100;
  std::size_t subset_budget = 256;
  std::vector<SweepAxis> sweep;
  std::vector<std::pair<std::string, std::string>> entries;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown or repeated keys are errors.
ExperimentSpec parse_experiment(std::string_view text);
ExperimentSpec parse_experiment(const std::vector<std::pair<std::string, std::string>>& entries);
ExperimentSpec load_experiment(const std::string& path);
/// Fully resolved spec in the same format; parsing it back gives an identical spec.
std::string echo_experiment(const ExperimentSpec& spec);
/// Names of every accepted key, in documentation order.
const std::vector<std::string>& experiment_keys();

/// Bound inputs drawn from the spec and its config.
BoundParams bound_params_for(const ExperimentSpec& spec);
/// (epsilon, epsilon_prime) to test: from the named bound when set, else the literal values.
std::pair<double, double> resolve_epsilons(const ExperimentSpec& spec);

std::string format_double(double x);   // shortest exact round-trip
std::string format_double17(double x); // 17 significant digits

Json config_json(const SimulationConfig& config);
Json strategy_json(const AdversaryStrategy& strategy, const SimulationConfig& config);
Json output_header(const ExperimentSpec& spec);
Json trace_summary_json(const ExecutionTrace& trace);
Json verdict_json(const EvpVerdict& verdict);
Json fairness_json(const FairnessReport& report);
Json exact_json(const ExactDistribution& dist);
Json bound_json(const BoundResult& result);

/// Columns: trial,seed_H,seed_A,U_min_H,U_max_A,violated,U_max_H,U_min_A, then U_H_j and U_A_j per observer.
std::string verdict_csv(const EvpVerdict& verdict, bool per_view = false);
/// Columns: trial,seed_H,seed_A,condition1,condition2,in_share_band,honest_cost_share,min_honest_share,min_coalition_share,max_coalition_share.
std::string fairness_csv(const FairnessReport& report);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace evpsim
