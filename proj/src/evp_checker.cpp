#include "evpsim/evp_checker.hpp"

#include "evpsim/engine.hpp"
#include "evpsim/rng.hpp"

namespace evpsim {

EvpVerdict estimate_evp(const SimulationConfig& config, const AdversaryStrategy& strategy, UtilityKind kind,
                        double epsilon, double epsilon_prime, std::size_t trials, std::uint64_t master_seed,
                        unsigned workers) {
  if (trials == 0) throw UsageError("estimate_evp needs at least one trial");
  config.validate();
  strategy.committed_withheld(config);
  const ParticipantSet coalition = config.coalition();

  EvpVerdict v;
  v.kind = kind;
  v.strategy = strategy;
  v.epsilon = epsilon;
  v.epsilon_prime = epsilon_prime;
  v.trials = trials;
  v.rows.resize(trials);

  parallel_for(trials, workers, [&](std::size_t i) {
    EvpTrial& row = v.rows[i];
    row.trial = i;
    row.seed_protocol = derive_seed(master_seed, SeedRole::protocol_following, i);
    row.seed_deviating = derive_seed(master_seed, SeedRole::deviating, i);
    {
      const ExecutionTrace h = run_execution(config, AdversaryStrategy::front_runner(), row.seed_protocol);
      const UtilityReport u = u_min_max(h, kind, coalition);
      row.u_min_protocol = u.min;
      row.u_max_protocol = u.max;
      row.per_view_protocol = u.per_view;
      row.coalition_successes_protocol = h.coalition_successful_rounds;
    }
    {
      const ExecutionTrace a = run_execution(config, strategy, row.seed_deviating);
      const UtilityReport u = u_min_max(a, kind, coalition);
      row.u_min_deviating = u.min;
      row.u_max_deviating = u.max;
      row.per_view_deviating = u.per_view;
      row.coalition_successes_deviating = a.coalition_successful_rounds;
    }
    row.violated = evp_violated(row.u_max_deviating, row.u_min_protocol, epsilon, epsilon_prime);
  });

  RunningMoments max_a, min_h, min_a, max_h;
  for (const EvpTrial& row : v.rows) {
    v.violations += row.violated ? 1 : 0;
    max_a.add(row.u_max_deviating);
    min_h.add(row.u_min_protocol);
    min_a.add(row.u_min_deviating);
    max_h.add(row.u_max_protocol);
  }
  v.violation_rate = static_cast<double>(v.violations) / static_cast<double>(trials);
  v.confidence_interval = binomial_interval(v.violations, trials, 0.99);
  v.mean_u_max_deviating = max_a.mean();
  v.mean_u_min_protocol = min_h.mean();
  v.mean_u_min_deviating = min_a.mean();
  v.mean_u_max_protocol = max_h.mean();
  return v;
}

UtilityEstimate monte_carlo_utilities(const SimulationConfig& config, const AdversaryStrategy& strategy,
                                      UtilityKind kind, std::size_t trials, std::uint64_t master_seed,
                                      unsigned workers) {
  config.validate();
  const ParticipantSet coalition = config.coalition();
  std::vector<UtilityReport> reports(trials);
  parallel_for(trials, workers, [&](std::size_t i) {
    const ExecutionTrace tr = run_execution(config, strategy, derive_seed(master_seed, SeedRole::auxiliary, i));
    reports[i] = u_min_max(tr, kind, coalition);
  });
  UtilityEstimate est;
  if (trials == 0) return est;
  est.observers = reports.front().observers;
  est.per_view.resize(est.observers.size());
  for (const UtilityReport& r : reports) {
    for (std::size_t k = 0; k < r.per_view.size(); ++k) est.per_view[k].add(r.per_view[k]);
    est.min.add(r.min);
    est.max.add(r.max);
  }
  return est;
}

}  // namespace evpsim
