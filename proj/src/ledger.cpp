#include "evpsim/ledger.hpp"

#include <algorithm>

namespace evpsim {

Ledger::Ledger(const SimulationConfig& config)
    : schedule_(config.reward_schedule), coalition_size_(config.coalition_size) {
  blocks_.emplace_back();
}

BlockId Ledger::add_block(ParticipantId creator, BlockId parent, Round round, std::vector<FruitId> fruit_refs) {
  const Block& up = block(parent);
  if (round < up.round_created) throw UsageError("block cannot predate its parent");
  for (FruitId f : fruit_refs)
    if (fruit(f).round_created > round) throw UsageError("block references a fruit from a later round");
  Block b;
  b.id = static_cast<BlockId>(blocks_.size());
  b.creator = creator;
  b.parent = parent;
  b.height = up.height + 1;
  b.round_created = round;
  b.reward_epoch = epoch_index(schedule_, round);
  b.fruit_refs = std::move(fruit_refs);
  b.coalition_blocks_on_path = up.coalition_blocks_on_path + (creator >= 0 && creator < coalition_size_ ? 1 : 0);
  blocks_.push_back(std::move(b));
  return blocks_.back().id;
}

FruitId Ledger::add_fruit(ParticipantId creator, Round round) {
  Fruit f;
  f.id = static_cast<FruitId>(fruits_.size());
  f.creator = creator;
  f.round_created = round;
  f.reward_epoch = epoch_index(schedule_, round);
  fruits_.push_back(f);
  return f.id;
}

std::vector<BlockId> Ledger::chain_to(BlockId tip) const {
  std::vector<BlockId> out;
  out.reserve(static_cast<std::size_t>(block(tip).height) + 1);
  for (BlockId b = tip;; b = block(b).parent) {
    out.push_back(b);
    if (b == kGenesis) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace evpsim
