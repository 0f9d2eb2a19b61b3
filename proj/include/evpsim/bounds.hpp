#pragma once

#include <optional>
#include <string>
#include <vector>

namespace evpsim {

/// Lower-tail bound Pr(X <= (1-delta) mu) <= exp(-delta^2 mu / 2). Needs mu > 0, delta in (0,1].
double chernoff_lower(double mu, double delta);
/// Upper-tail bound Pr(X >= (1+delta) mu) <= exp(-delta^2 mu / 3). Needs mu > 0, delta in (0,1].
double chernoff_upper(double mu, double delta);

/// Closed-form guarantees available to the checker. Numeric ids are accepted on the command line.
enum class BoundKind {
  bitcoin_absolute = 1,
  bitcoin_absolute_schedule = 3,
  bitcoin_profit = 4,
  bitcoin_relative_gap = 5,
  bitcoin_profit_schedule = 6,
  fairness_relative = 8,
  fruitchain_relative = 9,
  fruitchain_profit = 10,
};

std::string to_string(BoundKind kind);
BoundKind parse_bound_kind(const std::string& name);

/// Inputs to the bound calculators; each bound reads only what it needs.
struct BoundParams {
  std::optional<double> delta1;
  std::optional<double> solutions_per_round;  // expected solutions per round; else p * q * n
  std::optional<double> phi;
  std::optional<double> cost_per_query;
  std::optional<double> p;
  std::optional<double> p_fruit;
  std::optional<double> queries_per_round;
  std::optional<double> n;
  std::optional<double> coalition_bound;  // largest coalition the claim covers
  std::optional<double> coalition_size;
  std::optional<double> delta_prime;
  std::optional<double> delta_double_prime;
  std::optional<double> delta;
  std::optional<double> fairness_window;  // rounds needed by the protocol's own fairness property
  std::vector<double> rewards;            // per-epoch reward (block or fruit)
  std::vector<double> epoch_lengths;      // rounds per reward epoch, last one included
  std::optional<double> min_epoch_rounds;
};

struct BoundResult {
  BoundKind kind = BoundKind::bitcoin_absolute;
  std::optional<double> coalition_bound;
  std::optional<double> epsilon;
  std::optional<double> epsilon_prime;
  std::optional<double> gap;         // relative-reward gap a deviation achieves
  std::optional<double> min_rounds;  // suggested execution length
  std::vector<std::string> conditions;
};

/// Evaluates the chosen bound. A violated hypothesis raises SideConditionError naming it; a
/// missing input raises UsageError.
BoundResult theorem_epsilon(BoundKind kind, const BoundParams& params);

}  // namespace evpsim
