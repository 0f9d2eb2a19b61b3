#include "evpsim/protocols.hpp"

namespace evpsim {

void select_chain(ViewState& view, std::span<const Message> deliveries, const Ledger& ledger) {
  for (const Message& m : deliveries) {
    if (m.kind == MessageKind::fruit) {
      view.learn_fruit(m.object);
      continue;
    }
    const Block& b = ledger.block(m.object);
    if (!view.knows_block(b.parent)) continue;
    view.learn_block(b.id);
    if (b.height > view.height()) view.move_tip(b.id, ledger);
  }
}

LocalView select_chain(ChainSelectionInput input, const Ledger& ledger) {
  select_chain(input.current, input.deliveries, ledger);
  return input.current.snapshot(ledger);
}

HonestRoundResult honest_round_bitcoin(const ViewState& view, QueryTally tally, Ledger& ledger, ParticipantId who,
                                       Round round) {
  HonestRoundResult out;
  out.blocks_found = tally.blocks;
  if (tally.blocks > 0) out.block = ledger.add_block(who, view.tip(), round);
  return out;
}

HonestRoundResult honest_round_fruitchain(const ViewState& view, QueryTally tally, Ledger& ledger,
                                          ParticipantId who, Round round, Round recency_window) {
  HonestRoundResult out;
  out.blocks_found = tally.blocks;
  if (tally.blocks > 0)
    out.block = ledger.add_block(who, view.tip(), round, view.pending_fruits(ledger, round, recency_window));
  out.fruits.reserve(static_cast<std::size_t>(tally.fruits));
  for (int k = 0; k < tally.fruits; ++k) out.fruits.push_back(ledger.add_fruit(who, round));
  return out;
}

HonestRoundResult honest_round_bitcoin(const ViewState& view, int q, RandomOracle& oracle, Ledger& ledger,
                                       ParticipantId who, Round round) {
  return honest_round_bitcoin(view, oracle.query_batch(q), ledger, who, round);
}

HonestRoundResult honest_round_fruitchain(const ViewState& view, int q, RandomOracle& oracle, Ledger& ledger,
                                          ParticipantId who, Round round, Round recency_window) {
  return honest_round_fruitchain(view, oracle.query_batch(q), ledger, who, round, recency_window);
}

}  // namespace evpsim
