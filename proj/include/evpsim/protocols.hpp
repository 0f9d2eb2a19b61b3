#pragma once

#include <optional>
#include <span>
#include <vector>

#include "evpsim/diffuse.hpp"
#include "evpsim/ledger.hpp"
#include "evpsim/oracle.hpp"
#include "evpsim/view.hpp"

namespace evpsim {

/// Longest-chain rule over an ordered delivery list. A block replaces the tip only if it is
/// strictly higher, so among equally long candidates the first one received wins. Blocks whose
/// parent the view has never seen are dropped.
void select_chain(ViewState& view, std::span<const Message> deliveries, const Ledger& ledger);

struct ChainSelectionInput {
  ViewState current;
  std::vector<Message> deliveries;
};
LocalView select_chain(ChainSelectionInput input, const Ledger& ledger);

struct HonestRoundResult {
  std::optional<BlockId> block;  // the only block handed to the network
  int blocks_found = 0;
  std::vector<FruitId> fruits;   // every fruit found, all handed to the network
};

/// All q queries are asked; only the first block found leaves the participant. The parent is
/// the tip selected at round start and does not move during the round.
HonestRoundResult honest_round_bitcoin(const ViewState& view, int q, RandomOracle& oracle, Ledger& ledger,
                                       ParticipantId who, Round round);

/// Fruitchain variant: the block (at most one) references every known, recent fruit not yet in
/// the chain as of round start; all fruits found are returned.
HonestRoundResult honest_round_fruitchain(const ViewState& view, int q, RandomOracle& oracle, Ledger& ledger,
                                          ParticipantId who, Round round, Round recency_window);

/// The same procedures with the query outcomes already drawn (used by coalition members, whose
/// queries are charged against the coalition budget).
HonestRoundResult honest_round_bitcoin(const ViewState& view, QueryTally tally, Ledger& ledger, ParticipantId who,
                                       Round round);
HonestRoundResult honest_round_fruitchain(const ViewState& view, QueryTally tally, Ledger& ledger,
                                          ParticipantId who, Round round, Round recency_window);

inline bool fruit_recency_valid(const Fruit& fruit, Round current_round, Round window) {
  return current_round - fruit.round_created <= window;
}

}  // namespace evpsim
