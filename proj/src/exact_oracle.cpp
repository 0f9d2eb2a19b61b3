#include "evpsim/exact_oracle.hpp"

#include <cmath>

#include "evpsim/engine.hpp"

namespace evpsim {

namespace {

struct Alphabet {
  std::vector<QueryOutcome> kinds;
  std::vector<double> probs;
};

Alphabet alphabet_for(const SimulationConfig& config) {
  Alphabet a;
  const double none = 1.0 - config.p - config.p_fruit;
  if (none > 0.0) {
    a.kinds.push_back(QueryOutcome::none);
    a.probs.push_back(none);
  }
  if (config.p > 0.0) {
    a.kinds.push_back(QueryOutcome::block);
    a.probs.push_back(config.p);
  }
  if (config.p_fruit > 0.0) {
    a.kinds.push_back(QueryOutcome::fruit);
    a.probs.push_back(config.p_fruit);
  }
  return a;
}

std::int64_t total_draws(const SimulationConfig& config, const AdversaryStrategy& strategy) {
  return queries_per_round_total(config, strategy) * config.rounds;
}

}  // namespace

long double exact_outcome_count(const SimulationConfig& config, const AdversaryStrategy& strategy) {
  config.validate();
  const Alphabet a = alphabet_for(config);
  return std::pow(static_cast<long double>(a.kinds.size()), static_cast<long double>(total_draws(config, strategy)));
}

ExactDistribution brute_force_oracle(const SimulationConfig& config, const AdversaryStrategy& strategy,
                                     UtilityKind kind, std::uint64_t max_outcomes) {
  const long double count = exact_outcome_count(config, strategy);
  if (count > static_cast<long double>(max_outcomes)) throw InstanceTooLarge(count, max_outcomes);

  const Alphabet a = alphabet_for(config);
  const std::int64_t draws = total_draws(config, strategy);
  const ParticipantSet coalition = config.coalition();

  ExactDistribution out;
  out.draws = draws;
  std::vector<std::size_t> digits(static_cast<std::size_t>(draws), 0);
  RunOptions opts;
  opts.script.emplace(static_cast<std::size_t>(draws), a.kinds.front());

  for (;;) {
    double prob = 1.0;
    for (std::size_t d = 0; d < digits.size(); ++d) {
      (*opts.script)[d] = a.kinds[digits[d]];
      prob *= a.probs[digits[d]];
    }
    const ExecutionTrace trace = run_execution(config, strategy, 0, opts);
    const UtilityReport u = u_min_max(trace, kind, coalition);
    if (out.observers.empty()) {
      out.observers = u.observers;
      out.expected_per_view.assign(u.per_view.size(), 0.0);
    }
    for (std::size_t k = 0; k < u.per_view.size(); ++k) out.expected_per_view[k] += prob * u.per_view[k];
    out.expected_min += prob * u.min;
    out.expected_max += prob * u.max;
    out.min_distribution[u.min] += prob;
    out.max_distribution[u.max] += prob;
    out.total_probability += prob;
    ++out.outcomes;

    // Odometer increment over the outcome alphabet.
    std::size_t d = 0;
    while (d < digits.size() && ++digits[d] == a.kinds.size()) digits[d++] = 0;
    if (d == digits.size()) break;
  }
  return out;
}

}  // namespace evpsim
