#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evpsim/adversaries.hpp"
#include "evpsim/config.hpp"
#include "evpsim/ledger.hpp"
#include "evpsim/oracle.hpp"
#include "evpsim/view.hpp"

namespace evpsim {

struct RoundRecord {
  Round round = 0;
  bool successful = false;            // somebody found a block
  bool coalition_successful = false;  // some coalition member found a block
  bool honest_successful = false;
  // (creator, id) of every block / fruit created this round, published or not.
  std::vector<std::pair<ParticipantId, BlockId>> blocks;
  std::vector<std::pair<ParticipantId, FruitId>> fruits;
  std::size_t messages_delivered = 0;  // summed over honest recipients
  std::int64_t honest_queries = 0;
  std::int64_t coalition_queries = 0;
};

/// State visible to a per-round observer, taken after delivery.
struct RoundSnapshot {
  Round round;
  const Ledger& ledger;
  const std::vector<ViewState>& honest_views;  // participant coalition_size + k at position k
  const ViewState& adversary_view;
  std::int64_t successful_rounds;
  std::int64_t coalition_successful_rounds;
};

using RoundObserver = std::function<void(const RoundSnapshot&)>;

struct RunOptions {
  bool record_rounds = false;
  RoundObserver observer;
  // Replay these outcomes instead of sampling (one per query, in activation order).
  std::optional<std::vector<QueryOutcome>> script;
};

struct ExecutionTrace {
  explicit ExecutionTrace(const SimulationConfig& c) : config(c), ledger(c) {}

  SimulationConfig config;
  AdversaryStrategy strategy;
  std::uint64_t seed = 0;
  Ledger ledger;
  std::vector<LocalView> final_views;  // honest participants in index order
  LocalView adversary_view;
  std::vector<RoundRecord> per_round;  // filled only when requested
  std::vector<std::int64_t> query_counts;  // per participant

  std::int64_t successful_rounds = 0;
  std::int64_t coalition_successful_rounds = 0;
  std::int64_t honest_successful_rounds = 0;
  std::int64_t coalition_blocks_found = 0;  // including extra blocks never broadcast
  std::int64_t honest_blocks_found = 0;
  std::int64_t coalition_fruits = 0;
  std::int64_t honest_fruits = 0;
  std::int64_t unpublished_coalition_blocks = 0;

  const LocalView& view_of(ParticipantId observer) const;
  bool is_honest(ParticipantId i) const { return i >= config.coalition_size && i < config.n; }
};

/// One execution of exactly config.rounds rounds. Same (config, strategy, seed) gives the same trace.
ExecutionTrace run_execution(const SimulationConfig& config, const AdversaryStrategy& strategy, std::uint64_t seed,
                             const RunOptions& options = {});

/// Queries asked per round by everybody together (honest q each, coalition its commitment).
std::int64_t queries_per_round_total(const SimulationConfig& config, const AdversaryStrategy& strategy);

}  // namespace evpsim
