#include "evpsim/engine.hpp"

#include <numeric>

#include "evpsim/diffuse.hpp"
#include "evpsim/protocols.hpp"

namespace evpsim {

const LocalView& ExecutionTrace::view_of(ParticipantId observer) const {
  if (!is_honest(observer)) throw UsageError("observer " + std::to_string(observer) + " is not honest");
  return final_views.at(static_cast<std::size_t>(observer - config.coalition_size));
}

std::int64_t queries_per_round_total(const SimulationConfig& config, const AdversaryStrategy& strategy) {
  const auto budgets = strategy.committed_budgets(config);
  return static_cast<std::int64_t>(config.n - config.coalition_size) * config.queries_per_round +
         std::accumulate(budgets.begin(), budgets.end(), std::int64_t{0});
}

ExecutionTrace run_execution(const SimulationConfig& config, const AdversaryStrategy& strategy, std::uint64_t seed,
                             const RunOptions& options) {
  config.validate();
  ExecutionTrace trace(config);
  trace.strategy = strategy;
  trace.seed = seed;

  const int n = config.n;
  const int t = config.coalition_size;
  const int q = config.queries_per_round;
  const bool fruitchain = config.protocol == ProtocolKind::fruitchain;
  const Round window = config.recency_window();
  const ParticipantSet honest = config.honest();

  RandomOracle oracle = options.script ? RandomOracle::scripted(*options.script)
                                       : RandomOracle(config.p, config.p_fruit, config.sampling, seed, q);
  CoalitionOracle coalition(oracle, strategy.committed_budgets(config));
  std::unique_ptr<Adversary> adversary = make_adversary(strategy, config);

  std::vector<ViewState> views;
  views.reserve(static_cast<std::size_t>(n - t));
  for (ParticipantId j = t; j < n; ++j) views.emplace_back(j);

  DiffuseBuffer buffer;
  DeliveryLists deliveries;
  std::vector<Message> adversary_stream;
  std::vector<std::int64_t> honest_queries(static_cast<std::size_t>(n), 0);
  if (options.record_rounds) trace.per_round.reserve(static_cast<std::size_t>(config.rounds));

  for (Round k = 1; k <= config.rounds; ++k) {
    buffer.begin_round(k);
    coalition.begin_round();
    const std::size_t blocks_before = trace.ledger.block_count();
    const std::size_t fruits_before = trace.ledger.fruit_count();
    bool honest_success = false;

    for (ParticipantId j = t; j < n; ++j) {
      const ViewState& view = views[static_cast<std::size_t>(j - t)];
      const HonestRoundResult res = fruitchain
                                        ? honest_round_fruitchain(view, q, oracle, trace.ledger, j, k, window)
                                        : honest_round_bitcoin(view, q, oracle, trace.ledger, j, k);
      honest_queries[static_cast<std::size_t>(j)] += q;
      if (res.blocks_found > 0) {
        honest_success = true;
        trace.honest_blocks_found += res.blocks_found;
      }
      if (res.block) buffer.send_honest({MessageKind::block, *res.block, j, false});
      for (FruitId f : res.fruits) buffer.send_honest({MessageKind::fruit, f, j, false});
      trace.honest_fruits += static_cast<std::int64_t>(res.fruits.size());
    }

    AdversaryContext ctx{k, config, trace.ledger, coalition, buffer.honest(), buffer};
    adversary->play_round(ctx);
    coalition.finish_round();
    const bool coalition_success = coalition.blocks_this_round() > 0;
    trace.coalition_blocks_found += coalition.blocks_this_round();
    trace.coalition_fruits += coalition.fruits_this_round();

    diffuse_flush_into(buffer, k, honest, deliveries);
    std::size_t delivered = 0;
    if (!buffer.empty()) {
      for (ParticipantId j = t; j < n; ++j) {
        const auto& list = deliveries[static_cast<std::size_t>(j)];
        delivered += list.size();
        select_chain(views[static_cast<std::size_t>(j - t)], list, trace.ledger);
      }
      adversary_stream.assign(buffer.adversarial().begin(), buffer.adversarial().end());
      adversary_stream.insert(adversary_stream.end(), buffer.honest().begin(), buffer.honest().end());
      adversary->end_round(adversary_stream, trace.ledger, k);
    }

    trace.successful_rounds += (honest_success || coalition_success) ? 1 : 0;
    trace.coalition_successful_rounds += coalition_success ? 1 : 0;
    trace.honest_successful_rounds += honest_success ? 1 : 0;

    if (options.record_rounds) {
      RoundRecord rec;
      rec.round = k;
      rec.successful = honest_success || coalition_success;
      rec.coalition_successful = coalition_success;
      rec.honest_successful = honest_success;
      for (std::size_t b = blocks_before; b < trace.ledger.block_count(); ++b)
        rec.blocks.emplace_back(trace.ledger.block(static_cast<BlockId>(b)).creator, static_cast<BlockId>(b));
      for (std::size_t f = fruits_before; f < trace.ledger.fruit_count(); ++f)
        rec.fruits.emplace_back(trace.ledger.fruit(static_cast<FruitId>(f)).creator, static_cast<FruitId>(f));
      rec.messages_delivered = delivered;
      rec.honest_queries = static_cast<std::int64_t>(n - t) * q;
      rec.coalition_queries = coalition.queries_this_round();
      trace.per_round.push_back(std::move(rec));
    }
    if (options.observer) {
      options.observer(RoundSnapshot{k, trace.ledger, views, adversary->view(), trace.successful_rounds,
                                     trace.coalition_successful_rounds});
    }
  }

  trace.query_counts = honest_queries;
  for (int m = 0; m < t; ++m)
    trace.query_counts[static_cast<std::size_t>(m)] = coalition.total_queries()[static_cast<std::size_t>(m)];
  trace.final_views.reserve(views.size());
  for (const ViewState& v : views) trace.final_views.push_back(v.snapshot(trace.ledger));
  trace.adversary_view = adversary->view().snapshot(trace.ledger);
  trace.unpublished_coalition_blocks = adversary->unpublished_blocks();
  return trace;
}

}  // namespace evpsim
