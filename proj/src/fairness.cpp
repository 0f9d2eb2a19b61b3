#include "evpsim/fairness.hpp"

#include <algorithm>
#include <set>

#include "evpsim/accounting.hpp"
#include "evpsim/engine.hpp"
#include "evpsim/rng.hpp"
#include "evpsim/stats.hpp"

namespace evpsim {

std::vector<ParticipantSet> fairness_subsets(int n, std::size_t budget, std::uint64_t seed) {
  std::vector<ParticipantSet> out;
  if (n <= 12) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      ParticipantSet s(n);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.insert(i);
      out.push_back(std::move(s));
    }
    return out;
  }
  std::set<std::vector<ParticipantId>> seen;
  for (int i = 0; i < n; ++i) {
    out.push_back(ParticipantSet::of(n, {i}));
    seen.insert({i});
  }
  CounterRng rng(seed);
  std::size_t drawn = 0;
  for (std::size_t attempt = 0; drawn < budget && attempt < budget * 64; ++attempt) {
    ParticipantSet s(n);
    for (int i = 0; i < n; ++i)
      if (rng() >> 63) s.insert(i);
    if (s.empty() || !seen.insert(s.members()).second) continue;
    out.push_back(std::move(s));
    ++drawn;
  }
  return out;
}

namespace {

double query_share(const ExecutionTrace& trace, const ParticipantSet& subset) {
  std::int64_t part = 0;
  std::int64_t all = 0;
  for (ParticipantId i = 0; i < trace.config.n; ++i) {
    all += trace.query_counts[static_cast<std::size_t>(i)];
    if (subset.contains(i)) part += trace.query_counts[static_cast<std::size_t>(i)];
  }
  return all == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(all);
}

struct TrialOutcome {
  FairnessTrial row;
  std::vector<char> subset_holds;
};

}  // namespace

FairnessReport weak_fairness_check(const SimulationConfig& config, const AdversaryStrategy& strategy, double delta,
                                   std::size_t trials, std::size_t subset_budget, std::uint64_t master_seed,
                                   unsigned workers) {
  if (!(delta >= 0.0 && delta < 1.0)) throw UsageError("delta must lie in [0,1)");
  if (trials == 0) throw UsageError("weak_fairness_check needs at least one trial");
  config.validate();
  strategy.committed_withheld(config);

  const ParticipantSet coalition = config.coalition();
  const ParticipantSet honest = config.honest();
  const std::vector<ParticipantSet> subsets =
      fairness_subsets(config.n, subset_budget, derive_seed(master_seed, SeedRole::auxiliary, 0));

  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, workers, [&](std::size_t i) {
    TrialOutcome& out = outcomes[i];
    FairnessTrial& row = out.row;
    row.trial = i;
    row.seed_protocol = derive_seed(master_seed, SeedRole::protocol_following, i);
    row.seed_deviating = derive_seed(master_seed, SeedRole::deviating, i);

    const ExecutionTrace h = run_execution(config, AdversaryStrategy::front_runner(), row.seed_protocol);
    row.honest_cost_share = query_share(h, honest);
    const double coalition_cost_share = query_share(h, coalition);

    out.subset_holds.assign(subsets.size(), 1);
    std::vector<double> subset_shares(subsets.size());
    for (std::size_t s = 0; s < subsets.size(); ++s) subset_shares[s] = query_share(h, subsets[s]);
    for (ParticipantId j : honest.members()) {
      const ViewRewards rw(h, j);
      const double total = rw.total();
      for (std::size_t s = 0; s < subsets.size(); ++s)
        if (rw.of(subsets[s]) < (1.0 - delta) * subset_shares[s] * total) out.subset_holds[s] = 0;
    }
    row.condition2 = std::all_of(out.subset_holds.begin(), out.subset_holds.end(), [](char c) { return c != 0; });

    const ExecutionTrace a = run_execution(config, strategy, row.seed_deviating);
    row.condition1 = true;
    row.in_share_band = true;
    row.min_honest_share = 1.0;
    row.min_coalition_share = 1.0;
    row.max_coalition_share = 0.0;
    for (ParticipantId j : honest.members()) {
      const ViewRewards rw(a, j);
      const double total = rw.total();
      const double honest_r = rw.of(honest);
      const double coalition_r = rw.of(coalition);
      if (honest_r < (1.0 - delta) * row.honest_cost_share * total) row.condition1 = false;
      const double hs = total > 0 ? honest_r / total : 0.0;
      const double cs = total > 0 ? coalition_r / total : 0.0;
      row.min_honest_share = std::min(row.min_honest_share, hs);
      row.min_coalition_share = std::min(row.min_coalition_share, cs);
      row.max_coalition_share = std::max(row.max_coalition_share, cs);
      if (cs < (1.0 - delta) * coalition_cost_share || cs > (1.0 + delta) * coalition_cost_share)
        row.in_share_band = false;
    }
  });

  FairnessReport rep;
  rep.delta = delta;
  rep.trials = trials;
  rep.subsets.resize(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) rep.subsets[s].members = subsets[s].members();
  std::size_t c1 = 0, c2 = 0, band = 0;
  for (const TrialOutcome& out : outcomes) {
    c1 += out.row.condition1;
    c2 += out.row.condition2;
    band += out.row.in_share_band;
    for (std::size_t s = 0; s < subsets.size(); ++s) rep.subsets[s].holds += out.subset_holds[s];
    rep.rows.push_back(out.row);
  }
  const double nt = static_cast<double>(trials);
  rep.condition1_rate = static_cast<double>(c1) / nt;
  rep.condition2_rate = static_cast<double>(c2) / nt;
  rep.share_band_rate = static_cast<double>(band) / nt;
  for (auto& s : rep.subsets) s.rate = static_cast<double>(s.holds) / nt;
  return rep;
}

}  // namespace evpsim
